#include "modcensus/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modcensus/constants.hpp"
#include "modcensus/functions.hpp"
#include "modcensus/orbit.hpp"
#include "modcensus/summatory.hpp"

namespace modcensus::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// Reals are printed with 15 significant digits; rounding the double to that
// decimal form first keeps JSON and CSV output identical and diffable.
double sig15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

void add_int128(ojson& record, const char* key, int128 v) {
    constexpr int128 lo = -(int128{1} << 62);
    constexpr int128 hi = int128{1} << 62;
    if (v > lo && v < hi)
        record[key] = static_cast<std::int64_t>(v);
    else
        record[key] = to_string(v);
}

enum class Format { json, csv };

class Emitter {
public:
    Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

    void row(const ojson& record) {
        if (format_ == Format::json) {
            out_ << record.dump() << '\n';
            return;
        }
        if (!header_done_) {
            bool first = true;
            for (const auto& [key, value] : record.items()) {
                out_ << (first ? "" : ",") << key;
                first = false;
            }
            out_ << '\n';
            header_done_ = true;
        }
        bool first = true;
        for (const auto& [key, value] : record.items()) {
            out_ << (first ? "" : ",") << cell(value);
            first = false;
        }
        out_ << '\n';
    }

private:
    static std::string cell(const ojson& v) {
        if (v.is_null()) return "";
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    Format format_;
    std::ostream& out_;
    bool header_done_ = false;
};

ojson make_record(const char* command) {
    ojson record;
    record["schema_version"] = kSchemaVersion;
    record["command"] = command;
    return record;
}

// Scoped override of the sieve-budget environment variable; the library
// reads it on every table build.
class BudgetOverride {
public:
    explicit BudgetOverride(std::uint64_t budget) : active_(budget > 0) {
        if (!active_) return;
        if (const char* old = std::getenv("MODCENSUS_SIEVE_BUDGET")) saved_ = old;
        setenv("MODCENSUS_SIEVE_BUDGET", std::to_string(budget).c_str(), 1);
    }
    ~BudgetOverride() {
        if (!active_) return;
        if (saved_.empty())
            unsetenv("MODCENSUS_SIEVE_BUDGET");
        else
            setenv("MODCENSUS_SIEVE_BUDGET", saved_.c_str(), 1);
    }
    BudgetOverride(const BudgetOverride&) = delete;
    BudgetOverride& operator=(const BudgetOverride&) = delete;

private:
    bool active_;
    std::string saved_;
};

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
    std::vector<std::uint64_t> cps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        std::size_t used = 0;
        unsigned long long v = std::stoull(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad checkpoint value: " + item);
        cps.push_back(v);
        pos = comma + 1;
    }
    return cps;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t lowest, std::uint64_t max) {
    std::vector<std::uint64_t> cps;
    for (std::uint64_t d = 10; d < max; d *= 10) {
        if (d >= lowest) cps.push_back(d);
        if (d > max / 10) break;
    }
    cps.push_back(max);
    return cps;
}

FunctionId parse_function(const std::string& name) {
    if (auto id = function_from_name(name)) return *id;
    throw std::invalid_argument("unknown function id: " + name);
}

int cmd_eval(Emitter& emit, const std::string& fn, std::uint64_t n) {
    const FunctionId id = parse_function(fn);
    ojson record = make_record("eval");
    record["fn"] = fn;
    record["n"] = n;
    record["value"] = evaluate(id, n);
    emit.row(record);
    return 0;
}

int cmd_census(Emitter& emit, std::uint64_t n) {
    const OrbitCensus census = census_by_orbit(n);
    for (const auto& [key, count] : census.counts) {
        ojson record = make_record("census");
        record["n"] = n;
        record["sigma"] = key.first;
        record["tau"] = key.second;
        record["count"] = count;
        emit.row(record);
    }
    return 0;
}

int cmd_sum(Emitter& emit, const std::string& fn, std::uint64_t max,
            const std::string& checkpoints_text, int threads) {
    if (fn == "kappa_reciprocal") {
        const auto cps = checkpoints_text.empty() ? default_checkpoints(16, max)
                                                  : parse_checkpoints(checkpoints_text);
        for (const auto& row : kernel_reciprocal_diagnostics(max, cps)) {
            ojson record = make_record("sum");
            record["fn"] = fn;
            record["checkpoint"] = row.checkpoint;
            record["sum"] = sig15(row.sum);
            if (row.exact.empty())
                record["exact"] = nullptr;
            else
                record["exact"] = row.exact;
            record["debruijn_ratio"] = sig15(row.debruijn_ratio);
            emit.row(record);
        }
        return 0;
    }
    const FunctionId id = parse_function(fn);
    const auto cps = checkpoints_text.empty() ? default_checkpoints(10, max)
                                              : parse_checkpoints(checkpoints_text);
    for (const SummatoryRow& row : summatory_table(id, max, cps, threads)) {
        ojson record = make_record("sum");
        record["fn"] = fn;
        record["checkpoint"] = row.checkpoint;
        add_int128(record, "exact_sum", row.exact_sum);
        if (row.predicted) {
            record["predicted"] = sig15(*row.predicted);
            record["ratio"] = sig15(*row.ratio);
        } else {
            record["predicted"] = nullptr;
            record["ratio"] = nullptr;
        }
        emit.row(record);
    }
    return 0;
}

int cmd_const(Emitter& emit, const std::string& name, double target_error) {
    ConstantId id;
    if (name == "A") id = ConstantId::A;
    else if (name == "B") id = ConstantId::B;
    else if (name == "C") id = ConstantId::C;
    else if (name == "Atilde") id = ConstantId::Atilde;
    else if (name == "three_over_pi_sq") id = ConstantId::three_over_pi_sq;
    else if (name == "six_over_pi_sq") id = ConstantId::six_over_pi_sq;
    else throw std::invalid_argument("unknown constant: " + name);

    const ConstantEstimate est = euler_product(id, target_error);
    ojson record = make_record("const");
    record["name"] = name;
    record["value"] = sig15(static_cast<double>(est.value));
    record["tail_bound"] = sig15(est.tail_bound);
    record["prime_bound"] = est.prime_bound;
    record["series_depth"] = est.series_depth;
    emit.row(record);
    return 0;
}

int cmd_check(Emitter& emit, const std::string& series, double s, std::uint64_t terms,
              std::uint64_t primes, std::uint64_t n, double target_error) {
    if (series == "schwarz") {
        const SchwarzProbe probe = schwarz_probe(n, target_error);
        ojson record = make_record("check");
        record["series"] = series;
        record["n"] = probe.n;
        record["y_star"] = sig15(probe.y_star);
        record["min_value"] = sig15(probe.min_value);
        record["kernel_sum"] = sig15(probe.kernel_sum);
        record["schwarz_ratio"] = sig15(probe.schwarz_ratio);
        emit.row(record);
        return 0;
    }
    if (series == "joshi") {
        const JoshiSum joshi = joshi_sum(terms);
        const ConstantEstimate ref = euler_product(ConstantId::A);
        ojson record = make_record("check");
        record["series"] = series;
        record["terms"] = joshi.terms;
        record["value"] = sig15(joshi.value);
        record["tail_bound"] = sig15(joshi.tail_bound);
        record["reference"] = sig15(static_cast<double>(ref.value));
        record["discrepancy"] =
            sig15(std::abs(joshi.value - static_cast<double>(ref.value)));
        emit.row(record);
        return 0;
    }

    SeriesId id;
    if (series == "a") id = SeriesId::a;
    else if (series == "b") id = SeriesId::b;
    else if (series == "c") id = SeriesId::c;
    else if (series == "u") id = SeriesId::u;
    else if (series == "v") id = SeriesId::v;
    else if (series == "w") id = SeriesId::w;
    else if (series == "m") id = SeriesId::m;
    else if (series == "z") id = SeriesId::z;
    else throw std::invalid_argument("unknown series: " + series);

    const bool shifted = id == SeriesId::a || id == SeriesId::b || id == SeriesId::c ||
                         id == SeriesId::m;
    if (s == 0) s = shifted ? 2.0 : 3.0;
    const SeriesCheckReport report = dirichlet_identity_check(id, s, terms, primes);
    ojson record = make_record("check");
    record["series"] = series;
    record["s"] = sig15(report.s);
    record["terms"] = report.sum_limit;
    record["primes"] = report.prime_bound;
    record["lhs"] = sig15(report.lhs);
    record["rhs"] = sig15(report.rhs);
    record["discrepancy"] = sig15(report.discrepancy);
    record["lhs_bound"] = sig15(report.lhs_bound);
    record["rhs_bound"] = sig15(report.rhs_bound);
    record["combined_bound"] = sig15(report.combined_bound());
    record["within_bound"] = report.discrepancy <= report.combined_bound();
    emit.row(record);
    return 0;
}

int cmd_verify(Emitter& emit, std::uint64_t max, int threads) {
    const auto mismatch = verify_formulas(max, threads);
    ojson record = make_record("verify");
    record["max"] = max;
    record["functions"] = kCensusFunctions.size();
    if (mismatch) {
        record["mismatch_fn"] = function_info(mismatch->id).name;
        record["mismatch_n"] = mismatch->n;
        record["formula"] = mismatch->formula;
        record["oracle"] = mismatch->oracle;
    } else {
        record["mismatch_fn"] = nullptr;
    }
    emit.row(record);
    return mismatch ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"census of period and transient statistics of modular power sequences"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    int threads = 0;
    app.add_option("--threads", threads, "thread cap for parallel kernels (0 = auto)")
        ->capture_default_str();
    std::uint64_t sieve_budget = 0;
    app.add_option("--sieve-budget", sieve_budget,
                   "max sieve entries per table (overrides MODCENSUS_SIEVE_BUDGET; "
                   "default 2^28)");

    auto* eval = app.add_subcommand("eval", "evaluate one counting function at one n");
    std::string eval_fn;
    std::uint64_t eval_n = 0;
    eval->add_option("--fn", eval_fn, "function id")->required();
    eval->add_option("--n", eval_n, "modulus")->required();
    eval->fallthrough();

    auto* census = app.add_subcommand("census", "full (sigma, tau) census of Z_n");
    std::uint64_t census_n = 0;
    census->add_option("--n", census_n, "modulus")->required();
    census->fallthrough();

    auto* sum = app.add_subcommand("sum", "summatory table with checkpoints");
    std::string sum_fn;
    std::uint64_t sum_max = 0;
    std::string sum_checkpoints;
    sum->add_option("--fn", sum_fn, "function id (or kappa_reciprocal)")->required();
    sum->add_option("--max", sum_max, "upper summation limit")->required();
    sum->add_option("--checkpoints", sum_checkpoints,
                    "comma-separated ascending checkpoints (default: powers of 10)");
    sum->fallthrough();

    auto* cst = app.add_subcommand("const", "evaluate one constant with a tail bound");
    std::string const_name;
    double const_target = 5e-13;
    cst->add_option("--name", const_name,
                    "A, B, C, Atilde, three_over_pi_sq, six_over_pi_sq")
        ->required();
    cst->add_option("--target-error", const_target, "requested tail bound")
        ->capture_default_str();
    cst->fallthrough();

    auto* check = app.add_subcommand("check", "Dirichlet-series identity or Schwarz probe");
    std::string check_series;
    double check_s = 0;
    std::uint64_t check_terms = 1'000'000;
    std::uint64_t check_primes = 100'000;
    std::uint64_t check_n = 100'000;
    double check_target = 1e-10;
    check->add_option("--series", check_series, "a, b, c, u, v, w, m, z, joshi, schwarz")
        ->required();
    check->add_option("--s", check_s, "evaluation point (default 2 or 3 by weight)");
    check->add_option("--terms", check_terms, "Dirichlet sum truncation N")
        ->capture_default_str();
    check->add_option("--primes", check_primes, "Euler product truncation P")
        ->capture_default_str();
    check->add_option("--n", check_n, "Schwarz probe limit N")->capture_default_str();
    check->add_option("--target-error", check_target, "Schwarz minimizer tolerance")
        ->capture_default_str();
    check->fallthrough();

    auto* verify = app.add_subcommand("verify", "formula-vs-oracle sweep");
    std::uint64_t verify_max = 2000;
    verify->add_option("--max", verify_max, "sweep bound")->capture_default_str();
    verify->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("modcensus");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    // flag beats the environment variable
    const BudgetOverride budget_override(sieve_budget);

    Emitter emit(format == "csv" ? Format::csv : Format::json, out);
    try {
        if (*eval) return cmd_eval(emit, eval_fn, eval_n);
        if (*census) return cmd_census(emit, census_n);
        if (*sum) return cmd_sum(emit, sum_fn, sum_max, sum_checkpoints, threads);
        if (*cst) return cmd_const(emit, const_name, const_target);
        if (*check)
            return cmd_check(emit, check_series, check_s, check_terms, check_primes,
                             check_n, check_target);
        if (*verify) return cmd_verify(emit, verify_max, threads);
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const precision_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const bracket_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace modcensus::cli
