#include "rls/cli.hpp"

#include "rls/asymptotic.hpp"
#include "rls/correlation.hpp"
#include "rls/optimizer.hpp"
#include "rls/seqcore.hpp"
#include "rls/spectral.hpp"
#include "rls/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace rls::cli {

namespace {

// Raised by commands whose numerical self-check failed (exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text) {
    const std::string t = trim(text);
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc() || ptr != last)
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

std::vector<double> to_fractions(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    for (const auto& tok : tokens) {
        const auto part = parse_fractions(tok);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

void require_prime_n(std::uint64_t n) {
    if (!is_odd_prime(n)) throw std::invalid_argument("n must be an odd prime (got " + std::to_string(n) + ")");
}

void require_size_cap(std::uint64_t n, bool allow_large) {
    if (!allow_large && n > default_max_n)
        throw std::invalid_argument("N=" + std::to_string(n) + " exceeds the default cap of " +
                                    std::to_string(default_max_n) + "; pass --allow-large to override");
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string row;
    for (const auto& f : fields) {
        if (!row.empty()) row += ',';
        row += f;
    }
    return row;
}

std::string fmt_int(std::uint64_t v) { return std::to_string(v); }

double relative_error(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Direct-vs-spectral agreement on every term of a report.
void spectral_cross_check(const std::vector<BinarySequence>& set, const IslReport& report) {
    constexpr double tol = 1e-9;
    auto mismatch = [](double got, double want) { return std::abs(got - want) > tol * std::max(1.0, std::abs(want)); };
    for (std::size_t p = 0; p < set.size(); ++p) {
        const double s = xx_auto_spectral(set[p]);
        if (mismatch(s, report.auto_terms[p]))
            throw ValidationError("spectral/direct mismatch on auto term p=" + std::to_string(p) + ": direct " +
                                  format_number(report.auto_terms[p]) + ", spectral " + format_number(s));
        for (std::size_t q = p + 1; q < set.size(); ++q) {
            const double c = xx_cross_spectral(set[p], set[q]);
            if (mismatch(c, report.cross_terms[p][q]))
                throw ValidationError("spectral/direct mismatch on cross term (" + std::to_string(p) + "," +
                                      std::to_string(q) + "): direct " + format_number(report.cross_terms[p][q]) +
                                      ", spectral " + format_number(c));
        }
    }
}

std::string sweep_row(std::uint64_t n, double exact, double asym) {
    return csv_row({fmt_int(n), format_number(exact), format_number(asym), format_number(relative_error(exact, asym))});
}

constexpr const char* sweep_header = "N,exact_normalized,asymptotic,relative_error";

struct Options {
    std::uint64_t n = 0;
    std::size_t m = 0;
    std::string fraction = "0";
    std::vector<std::string> fractions;
    std::size_t resolution = 0;
    double tol = 1e-9;
    std::uint64_t n_min = 0, n_max = 0;
    bool optimal = false;
    std::uint64_t exact_check = 0;
    std::uint64_t max_n = 61;
    std::uint64_t seed = 1;
    bool allow_large = false;
    std::string output;
};

void cmd_gen(const Options& o, std::ostream& out) {
    require_prime_n(o.n);
    const double f = parse_fraction(o.fraction);
    const auto rotations = bind_rotations(std::span<const double>(&f, 1), o.n);
    const auto seq = rotate(legendre_sequence(o.n), rotations.offsets.front());
    std::string line;
    for (int v : seq) {
        if (!line.empty()) line += ' ';
        line += std::to_string(v);
    }
    out << line << '\n';
}

std::vector<double> fractions_for(const Options& o) {
    auto f = to_fractions(o.fractions);
    if (f.empty()) throw std::invalid_argument("--fractions is required");
    if (o.m != 0 && o.m != f.size())
        throw std::invalid_argument("--m " + std::to_string(o.m) + " does not match " + std::to_string(f.size()) +
                                    " fractions");
    return f;
}

void cmd_isl(const Options& o, std::ostream& out) {
    require_prime_n(o.n);
    require_size_cap(o.n, o.allow_large);
    const auto fractions = fractions_for(o);
    const auto set = rotated_legendre_set(bind_rotations(fractions, o.n));
    const IslReport r = isl_direct(set);
    if (o.n <= spectral_check_max_n) spectral_cross_check(set, r);
    out << "N,M,total,normalized,auto_part,cross_part\n";
    out << csv_row({fmt_int(r.n), fmt_int(r.m), format_number(r.total), format_number(r.normalized),
                    format_number(r.auto_part()), format_number(r.cross_part())})
        << '\n';
}

void cmd_asym(const Options& o, std::ostream& out) {
    const auto fractions = fractions_for(o);
    const AsymptoticIsl a = asym_isl(fractions);
    out << "M,auto_part,cross_part,total\n";
    out << csv_row({fmt_int(fractions.size()), format_number(a.auto_part), format_number(a.cross_part),
                    format_number(a.total)})
        << '\n';
}

void cmd_surface(const Options& o, std::ostream& out) {
    if (o.m != 0 && o.m != 2) throw std::invalid_argument("surface is defined for --m 2 only");
    const std::size_t r = o.resolution == 0 ? 64 : o.resolution;
    if (r < 2) throw std::invalid_argument("--resolution must be at least 2");
    out << "f1,f2,asym_isl\n";
    const double dr = static_cast<double>(r);
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = 0; j <= r; ++j) {
            const double f[2] = {static_cast<double>(i) / dr, static_cast<double>(j) / dr};
            out << csv_row({format_number(f[0]), format_number(f[1]), format_number(asym_isl(f).total)}) << '\n';
        }
}

OptResult optimize_for(const Options& o) {
    if (o.m == 0) throw std::invalid_argument("--m is required");
    const std::size_t r = o.resolution == 0 ? default_resolution(o.m) : o.resolution;
    return optimize_rotations(o.m, r, o.tol);
}

void cmd_sweep(const Options& o, std::ostream& out) {
    if (o.n_min > o.n_max) throw std::invalid_argument("--n-min must not exceed --n-max");
    require_size_cap(o.n_max, o.allow_large);
    std::vector<double> fractions;
    if (o.optimal) {
        if (!o.fractions.empty()) throw std::invalid_argument("--optimal and --fractions are exclusive");
        fractions = optimize_for(o).fractions;
    } else {
        fractions = fractions_for(o);
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = next_prime(std::max<std::uint64_t>(o.n_min, 3)); p <= o.n_max; p = next_prime(p + 1))
        primes.push_back(p);
    if (primes.empty()) throw std::invalid_argument("no odd prime in [n-min, n-max]");

    const double asym = asym_isl(fractions).total;
    // Rows are computed out of order by a small worker pool and emitted in
    // ascending N.
    std::vector<std::string> rows(primes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            try {
                const auto set = rotated_legendre_set(bind_rotations(fractions, primes[i]));
                rows[i] = sweep_row(primes[i], isl_direct(set).normalized, asym);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(primes.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    out << sweep_header << '\n';
    for (const auto& row : rows) out << row << '\n';
}

void cmd_optimize(const Options& o, std::ostream& out) {
    OptResult r = optimize_for(o);
    std::string line;
    for (double f : r.fractions) {
        if (!line.empty()) line += ' ';
        line += format_number(f);
    }
    out << line << "  " << format_number(r.asym_value, 6) << '\n';
    if (o.exact_check != 0) {
        require_prime_n(o.exact_check);
        require_size_cap(o.exact_check, o.allow_large);
        r = exact_validate(std::move(r), o.exact_check);
        out << sweep_header << '\n' << sweep_row(r.exact_check->n, r.exact_check->normalized, r.asym_value) << '\n';
    }
}

void cmd_validate(const Options& o, std::ostream& out) {
    if (o.max_n < 7) throw std::invalid_argument("--max-n must be at least 7");
    ValidationOptions vo;
    vo.max_n = o.max_n;
    vo.seed = o.seed;
    bool all = true;
    for (const auto& c : run_validation(vo)) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " max_error=" << format_number(c.max_error, 12)
            << " tolerance=" << format_number(c.tolerance, 3) << " worst=[" << c.worst_input << "]\n";
        all = all && c.passed;
    }
    if (!all) throw ValidationError("validation failed");
}

}  // namespace

double parse_fraction(std::string_view text) {
    const std::string t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string::npos) return parse_double(t);
    const double num = parse_double(std::string_view(t).substr(0, slash));
    const double den = parse_double(std::string_view(t).substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + t + "'");
    return num / den;
}

std::vector<double> parse_fractions(std::string_view text) {
    std::vector<double> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out.push_back(parse_fraction(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') flush();
        else token += c;
    }
    flush();
    return out;
}

std::string format_number(double value, int precision) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integrated sidelobe level of rotated Legendre sequence sets", "rls_isl"};
    app.require_subcommand(1);
    Options o;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", o.output, "Write results to this file instead of stdout");
    };
    auto add_fractions = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--fractions,--fraction", o.fractions,
                                    "Rotation fractions in [0,1], decimals or p/q, comma separated")
                        ->delimiter(',');
        if (required) opt->required();
    };

    auto* gen = app.add_subcommand("gen", "Print a rotated Legendre sequence");
    gen->add_option("--n", o.n, "Odd prime length")->required();
    gen->add_option("--fraction", o.fraction, "Rotation fraction (decimal or p/q)");
    add_output(gen);

    auto* isl = app.add_subcommand("isl", "Exact ISL of a rotated Legendre set");
    isl->add_option("--n", o.n, "Odd prime length")->required();
    isl->add_option("--m", o.m, "Number of sequences (checked against --fractions)");
    add_fractions(isl, true);
    isl->add_flag("--allow-large", o.allow_large, "Lift the N <= 20000 cap");
    add_output(isl);

    auto* asym = app.add_subcommand("asym", "Asymptotic ISL/N^2 of a rotation set");
    asym->add_option("--m", o.m, "Number of sequences (checked against --fractions)");
    add_fractions(asym, true);
    add_output(asym);

    auto* surface = app.add_subcommand("surface", "Asymptotic ISL/N^2 over [0,1]^2 for M=2");
    surface->add_option("--m", o.m, "Must be 2");
    surface->add_option("--resolution", o.resolution, "Lattice steps per axis (default 64)");
    add_output(surface);

    auto* sweep = app.add_subcommand("sweep", "Exact vs asymptotic ISL/N^2 over a prime range");
    sweep->add_option("--m", o.m, "Number of sequences");
    add_fractions(sweep, false);
    sweep->add_flag("--optimal", o.optimal, "Use optimizer rotations for --m sequences");
    sweep->add_option("--n-min", o.n_min, "Lower end of the prime range")->required();
    sweep->add_option("--n-max", o.n_max, "Upper end of the prime range")->required();
    sweep->add_option("--resolution", o.resolution, "Optimizer grid resolution");
    sweep->add_option("--tol", o.tol, "Optimizer refinement tolerance");
    sweep->add_flag("--allow-large", o.allow_large, "Lift the N <= 20000 cap");
    add_output(sweep);

    auto* optimize = app.add_subcommand("optimize", "Minimize the asymptotic ISL over rotations");
    optimize->add_option("--m", o.m, "Number of sequences")->required();
    optimize->add_option("--resolution", o.resolution, "Grid resolution (default: 64 within budget)");
    optimize->add_option("--tol", o.tol, "Refinement tolerance");
    optimize->add_option("--exact-check", o.exact_check, "Also evaluate the exact ISL at this prime N");
    optimize->add_flag("--allow-large", o.allow_large, "Lift the N <= 20000 cap");
    add_output(optimize);

    auto* validate = app.add_subcommand("validate", "Run the built-in oracle equivalence checks");
    validate->add_option("--max-n", o.max_n, "Largest length checked (>= 7)");
    validate->add_option("--seed", o.seed, "Seed for randomized inputs");
    add_output(validate);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            err << "error: cannot open " << o.output << " for writing\n";
            return usage_error;
        }
        sink = &file;
    }

    try {
        if (*gen) cmd_gen(o, *sink);
        else if (*isl) cmd_isl(o, *sink);
        else if (*asym) cmd_asym(o, *sink);
        else if (*surface) cmd_surface(o, *sink);
        else if (*sweep) cmd_sweep(o, *sink);
        else if (*optimize) cmd_optimize(o, *sink);
        else if (*validate) cmd_validate(o, *sink);
    } catch (const ValidationError& e) {
        sink->flush();
        err << "error: " << e.what() << '\n';
        return validation_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    sink->flush();
    return ok;
}

}  // namespace rls::cli
