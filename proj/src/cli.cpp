#include "madhava/cli.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "madhava/aryabhata.hpp"
#include "madhava/constants.hpp"
#include "madhava/samkalitam.hpp"
#include "madhava/samskaram.hpp"
#include "madhava/series.hpp"

namespace madhava::cli {

namespace {

// ---------------------------------------------------------------------------
// Output record: one per run, rendered as JSON or CSV.  Cells carry a
// representation tag ("rational", "decimal:<digits>") or none for plain
// strings; "count" marks small non-negative integers emitted as JSON numbers.

struct Column {
    std::string name;
    std::string repr;
};

struct Metadata {
    std::string name;
    std::string repr;  // "", "count", "rational" or "decimal:<digits>"
    std::string value;
};

struct Record {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<Metadata> metadata;
};

// Integers drop the "/1" so tables stay readable; everything else is "p/q".
std::string rational_cell(const Rational& r) {
    return r.is_integer() ? r.numerator().get_str() : r.str();
}

std::string decimal_repr(int digits) { return "decimal:" + std::to_string(digits); }

void emit_json(const Record& record, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["command"] = record.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.parameters) params[key] = value;
    doc["parameters"] = std::move(params);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : record.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < record.columns.size(); ++i) {
            const Column& col = record.columns[i];
            if (col.repr.empty())
                obj[col.name] = row[i];
            else if (col.repr == "count")
                obj[col.name] = std::stoull(row[i]);
            else
                obj[col.name] = {{"repr", col.repr}, {"value", row[i]}};
        }
        doc["rows"].push_back(std::move(obj));
    }
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& m : record.metadata) {
        if (m.repr.empty())
            meta[m.name] = m.value;
        else if (m.repr == "count")
            meta[m.name] = std::stoull(m.value);
        else
            meta[m.name] = {{"repr", m.repr}, {"value", m.value}};
    }
    doc["metadata"] = std::move(meta);
    out << doc.dump(2) << "\n";
}

// Fractions (and anything else holding a slash) are quoted per the output
// contract; no cell ever contains a comma or quote character itself.
std::string csv_cell(const std::string& value) {
    if (value.find('/') != std::string::npos) return "\"" + value + "\"";
    return value;
}

void emit_csv(const Record& record, std::ostream& out) {
    // Metadata repeats on every row so the CSV carries the same numeric
    // content as the JSON document.
    std::string header;
    auto append_column = [&header](const std::string& name, const std::string& repr) {
        if (!header.empty()) header += ",";
        header += repr.empty() || repr == "count" ? name : name + ":" + repr;
    };
    for (const auto& col : record.columns) append_column(col.name, col.repr);
    for (const auto& m : record.metadata) append_column(m.name, m.repr);
    out << header << "\n";
    for (const auto& row : record.rows) {
        std::string line;
        for (const auto& cell : row) {
            if (!line.empty()) line += ",";
            line += csv_cell(cell);
        }
        for (const auto& m : record.metadata) {
            if (!line.empty()) line += ",";
            line += csv_cell(m.value);
        }
        out << line << "\n";
    }
}

void emit(const Record& record, const std::string& format, std::ostream& out) {
    if (format == "csv")
        emit_csv(record, out);
    else
        emit_json(record, out);
}

// ---------------------------------------------------------------------------
// Input parsing helpers.  Malformed numbers are usage errors (exit 2), which
// is what std::invalid_argument maps to in run().

Rational parse_rational(const std::string& text) { return Rational::from_string(text); }

FixedDecimal parse_decimal(const std::string& text) { return FixedDecimal::parse(text); }

// ---------------------------------------------------------------------------
// The verification suites: quick, deterministic re-checks of the library's
// contracts, exposed so a build can be smoke-tested from the shell.

struct Check {
    std::string name;
    std::function<bool()> body;
};

std::vector<Check> arith_checks() {
    return {
        {"rational-field-laws", [] {
             std::mt19937_64 rng(2025);
             std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
             for (int i = 0; i < 40; ++i) {
                 Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
                 if ((a + b) + c != a + (b + c)) return false;
                 if ((a * b) * c != a * (b * c)) return false;
                 if (a * (b + c) != a * b + a * c) return false;
                 if (a + b != b + a || a * b != b * a) return false;
             }
             return true;
         }},
        {"to-fixed-truncation-consistency", [] {
             std::mt19937_64 rng(7);
             std::uniform_int_distribution<long> num(-9999, 9999), den(1, 997);
             for (int i = 0; i < 40; ++i) {
                 Rational r(num(rng), den(rng));
                 FixedDecimal coarse = to_fixed(r, 6);
                 FixedDecimal fine = to_fixed(r, 11);
                 if (fine.rescaled(6) != coarse) return false;
             }
             return true;
         }},
        {"double-integral-linearity", [] {
             RationalPolynomial p = RationalPolynomial::monomial(1, Rational(1)) -
                                    RationalPolynomial::monomial(3, Rational(1, 6));
             RationalPolynomial q = RationalPolynomial::monomial(0, Rational(2)) +
                                    RationalPolynomial::monomial(4, Rational(3, 7));
             Rational a(5, 3), b(-2, 9);
             RationalPolynomial combined = (a * p + b * q).double_integral();
             RationalPolynomial separate = a * p.double_integral() + b * q.double_integral();
             return combined == separate &&
                    p.double_integral().evaluate(Rational(0)).is_zero();
         }},
    };
}

std::vector<Check> series_checks() {
    using series::TrigKind;
    return {
        {"expansion-telescopes", [] {
             for (unsigned m = 1; m <= 8; ++m) {
                 RationalPolynomial diff = series::expansion(TrigKind::sine, m + 1).polynomial -
                                           series::expansion(TrigKind::sine, m).polynomial;
                 if (diff.terms().size() != 1) return false;
                 if (diff.coefficient(2 * m + 1).abs() !=
                     Rational(Integer(1), factorial(2 * m + 1)))
                     return false;
             }
             return true;
         }},
        {"derivative-gives-cosine", [] {
             for (unsigned m = 2; m <= 8; ++m) {
                 if (!(series::expansion(TrigKind::sine, m).polynomial.derivative() ==
                       series::expansion(TrigKind::cosine, m).polynomial))
                     return false;
             }
             return true;
         }},
        {"pythagorean-identity", [] {
             std::mt19937_64 rng(11);
             std::uniform_int_distribution<long> num(1, 157);
             for (int i = 0; i < 8; ++i) {
                 Rational x(num(rng), 100);  // within (0, pi/2)
                 Rational s = series::eval_trig_exact(TrigKind::sine, x, 16);
                 Rational c = series::eval_trig_exact(TrigKind::cosine, x, 16);
                 Rational gap = (s * s + c * c - Rational(1)).abs();
                 if (gap > Rational(Integer(1), pow10(14))) return false;
             }
             return true;
         }},
        {"sine-of-half", [] {
             return series::eval_trig(TrigKind::sine, Rational(1, 2), 12).str() ==
                    "0.479425538604";
         }},
    };
}

std::vector<Check> refine_checks() {
    return {
        {"reciprocal-error-ratio", [] {
             // Error after M terms is (1/(x-d)) * (d/x)^(M+1): successive
             // errors shrink by exactly d/x.
             Rational x(4), d(1);
             Rational truth = Rational(1) / (x - d);
             for (unsigned m = 0; m + 1 <= 6; ++m) {
                 Rational e0 = (samskaram::refine_reciprocal(x, d, m) - truth).abs();
                 Rational e1 = (samskaram::refine_reciprocal(x, d, m + 1) - truth).abs();
                 if (e1 / e0 != d / x) return false;
             }
             return true;
         }},
        {"sqrt-iterates-descend-from-above", [] {
             for (long n : {95L, 2L, 1234L}) {
                 auto trace = samskaram::sqrt_heron(Rational(n), Rational(1), 6);
                 for (std::size_t j = 0; j + 1 < trace.iterates.size(); ++j) {
                     const Rational& a = trace.iterates[j];
                     const Rational& b = trace.iterates[j + 1];
                     if (b > a) return false;
                     if (!(a * a > Rational(n))) return false;
                 }
             }
             return true;
         }},
        {"heron-quadratic-convergence", [] {
             Rational root = samskaram::sqrt_oracle(Rational(95), 40);
             auto trace = samskaram::sqrt_heron(Rational(95), Rational(9), 4);
             for (std::size_t j = 0; j + 1 < trace.iterates.size(); ++j) {
                 Rational e0 = (trace.iterates[j] - root).abs();
                 Rational e1 = (trace.iterates[j + 1] - root).abs();
                 if (e0 < Rational(1) && !(e1 < e0 * e0)) return false;
             }
             return true;
         }},
        {"interpolation-order-3-discrepancy", [] {
             auto terms = samskaram::cosine_interpolation_coefficients(3);
             return terms[3].sin_coefficient == Rational(1, 8) &&
                    terms[3].sin_coefficient - Rational(1, 6) == Rational(-1, 24);
         }},
    };
}

std::vector<Check> powersum_checks() {
    return {
        {"recursion-matches-direct", [] {
             for (unsigned long n = 1; n <= 20; ++n)
                 for (unsigned k = 0; k <= 6; ++k)
                     if (samkalitam::power_sum_recursive(n, k).sum !=
                         samkalitam::power_sum(n, k).sum)
                         return false;
             return true;
         }},
        {"abel-identity-balances", [] {
             for (unsigned long n = 1; n <= 20; ++n)
                 for (unsigned k = 1; k <= 6; ++k) {
                     auto sides = samkalitam::abel_identity_check(n, k);
                     if (sides.lhs != sides.rhs) return false;
                 }
             return true;
         }},
        {"pi-partial-sums-bracket", [] {
             Rational quarter_pi = pi_rational(pi_digits_available) / Rational(4);
             for (unsigned long m = 1; m <= 9; ++m) {
                 Rational s = samkalitam::madhava_pi(m, 12).series.partial_sum;
                 if (m % 2 == 1 ? !(s > quarter_pi) : !(s < quarter_pi)) return false;
             }
             return true;
         }},
        {"deviation-positive-and-shrinking", [] {
             for (unsigned k = 1; k <= 10; ++k) {
                 Rational previous;
                 for (unsigned long n : {10UL, 100UL, 1000UL}) {
                     Rational dev = samkalitam::j_limit_deviation(n, k);
                     if (!(dev.sign() > 0)) return false;
                     if (n > 10 && !(dev < previous)) return false;
                     previous = dev;
                 }
             }
             return true;
         }},
        {"arctan-within-certified-bound", [] {
             std::mt19937_64 rng(23);
             std::uniform_int_distribution<long> num(0, 64);
             std::uniform_int_distribution<unsigned long> terms(1, 30);
             for (int i = 0; i < 12; ++i) {
                 Rational t(num(rng), 64);
                 auto result = samkalitam::arctan_series(t, terms(rng));
                 Rational truth = samkalitam::arctan_oracle(t, 30);
                 if ((result.partial_sum - truth).abs() > result.error_bound +
                         Rational(Integer(1), pow10(30)))
                     return false;
             }
             return true;
         }},
    };
}

std::vector<Check> quadrant_checks() {
    return {
        {"refined-matches-oracle", [] {
             for (unsigned long n : {1UL, 37UL, 100UL}) {
                 auto sample = samkalitam::quadrant_geometry(100, n, 25);
                 if ((sample.refined_prediction - sample.true_sin_delta).abs() >
                     Rational(Integer(1), pow10(20)))
                     return false;
             }
             return true;
         }},
        {"predicted-sum-approaches-quarter-pi", [] {
             Rational sum = samkalitam::quadrant_predicted_sum(100);
             Rational quarter_pi = pi_rational(pi_digits_available) / Rational(4);
             return sum < quarter_pi && quarter_pi - sum < Rational(4, 1000);
         }},
    };
}

std::vector<Check> table_checks() {
    using aryabhata::SeedPolicy;
    return {
        {"classical-table-hits-half-at-30-degrees", [] {
             auto table = aryabhata::generate_sine_table(Rational(1, 48), 24, 12);
             Rational half_err = (table.exact_values[7] - Rational(1, 2)).abs();
             return half_err < Rational(1, 1000);
         }},
        {"second-difference-ratio-constant", [] {
             auto table = aryabhata::generate_sine_table(Rational(1, 48), 24, 12);
             FixedDecimal first = aryabhata::second_difference_ratio(table, 2);
             for (unsigned n = 3; n <= 23; ++n)
                 if (aryabhata::second_difference_ratio(table, n) != first) return false;
             return true;
         }},
        {"cosine-table-same-constant", [] {
             auto sine_table = aryabhata::generate_sine_table(Rational(1, 48), 24, 12);
             auto cos_table = aryabhata::generate_cosine_table(Rational(1, 48), 24, 12);
             return aryabhata::second_difference_ratio(cos_table, 5) ==
                    aryabhata::second_difference_ratio(sine_table, 5);
         }},
        {"oracle-seeding-removes-error", [] {
             auto table =
                 aryabhata::generate_sine_table(Rational(1, 48), 24, 12, SeedPolicy::oracle);
             for (const auto& entry : table.entries) {
                 Rational truth = series::eval_trig_exact(
                     series::TrigKind::sine,
                     entry.angle_pi_multiple * pi_rational(pi_digits_available), 20);
                 if ((entry.value.to_rational() - truth).abs() > Rational(Integer(1), pow10(9)))
                     return false;
             }
             return true;
         }},
    };
}

// ---------------------------------------------------------------------------

struct CommonOptions {
    std::string format = "json";
    int digits = 12;
};

void add_format_option(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void add_digits_option(CLI::App* sub, CommonOptions& common) {
    sub->add_option("--digits", common.digits, "Decimal digits in rendered values")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Kerala-school series, refinement and sine-table calculator"};
    app.require_subcommand(1);

    // --- pi ---------------------------------------------------------------
    CommonOptions pi_common;
    unsigned long pi_terms = 0;
    std::string pi_method = "exact";
    CLI::App* pi_cmd = app.add_subcommand("pi", "Alternating odd-reciprocal series for pi");
    pi_cmd->add_option("--terms", pi_terms, "Summed terms M")->required();
    pi_cmd->add_option("--method", pi_method, "Accumulation arithmetic")
        ->check(CLI::IsMember({"exact", "decimal"}))
        ->capture_default_str();
    add_digits_option(pi_cmd, pi_common);
    add_format_option(pi_cmd, pi_common);

    // --- arctan -----------------------------------------------------------
    CommonOptions arctan_common;
    std::string arctan_t;
    unsigned long arctan_terms = 0;
    CLI::App* arctan_cmd = app.add_subcommand("arctan", "Gregory series partial sum");
    arctan_cmd->add_option("--t", arctan_t, "Tangent value in [0, 1], as p/q")->required();
    arctan_cmd->add_option("--terms", arctan_terms, "Summed terms M")->required();
    add_digits_option(arctan_cmd, arctan_common);
    add_format_option(arctan_cmd, arctan_common);

    // --- powersum ---------------------------------------------------------
    CommonOptions powersum_common;
    unsigned long ps_upper = 0;
    unsigned ps_power = 0;
    std::string ps_method = "direct";
    CLI::App* powersum_cmd = app.add_subcommand("powersum", "Exact power sum S_N(k)");
    powersum_cmd->add_option("--upper", ps_upper, "Upper limit N")->required();
    powersum_cmd->add_option("--power", ps_power, "Exponent k")->required();
    powersum_cmd->add_option("--method", ps_method, "Evaluation route")
        ->check(CLI::IsMember({"direct", "recursive"}))
        ->capture_default_str();
    add_format_option(powersum_cmd, powersum_common);

    // --- abel-check -------------------------------------------------------
    CommonOptions abel_common;
    unsigned long abel_upper = 0;
    unsigned abel_power = 0;
    CLI::App* abel_cmd =
        app.add_subcommand("abel-check", "Both sides of the re-summation identity");
    abel_cmd->add_option("--upper", abel_upper, "Upper limit N")->required();
    abel_cmd->add_option("--power", abel_power, "Exponent k >= 1")->required();
    add_format_option(abel_cmd, abel_common);

    // --- jk-deviation -----------------------------------------------------
    CommonOptions jk_common;
    unsigned long jk_upper = 0;
    unsigned jk_power = 0;
    CLI::App* jk_cmd =
        app.add_subcommand("jk-deviation", "Distance of I_N(k) from its limit 1/(k+1)");
    jk_cmd->add_option("--upper", jk_upper, "Upper limit N")->required();
    jk_cmd->add_option("--power", jk_power, "Exponent k")->required();
    add_format_option(jk_cmd, jk_common);

    // --- quadrant ---------------------------------------------------------
    CommonOptions quadrant_common;
    unsigned long quad_segments = 0, quad_index = 0;
    int quad_oracle_digits = 30;
    CLI::App* quadrant_cmd =
        app.add_subcommand("quadrant", "Chord geometry of one quarter-circle segment");
    quadrant_cmd->add_option("--segments", quad_segments, "Segment count N")->required();
    quadrant_cmd->add_option("--index", quad_index, "Segment index n (1-based)")->required();
    quadrant_cmd->add_option("--oracle-digits", quad_oracle_digits, "Oracle precision")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
    add_digits_option(quadrant_cmd, quadrant_common);
    add_format_option(quadrant_cmd, quadrant_common);

    // --- sine-table -------------------------------------------------------
    CommonOptions table_common;
    std::string table_step, table_seed = "epsilon", table_kind = "sine";
    unsigned table_count = 0;
    CLI::App* table_cmd =
        app.add_subcommand("sine-table", "Finite-difference sine or cosine table");
    table_cmd->add_option("--step", table_step, "Step angle as a multiple of pi, p/q")
        ->required();
    table_cmd->add_option("--count", table_count, "Number of entries")->required();
    table_cmd->add_option("--seed", table_seed, "Seeding policy")
        ->check(CLI::IsMember({"epsilon", "two-term", "oracle"}))
        ->capture_default_str();
    table_cmd->add_option("--kind", table_kind, "Table kind")
        ->check(CLI::IsMember({"sine", "cosine"}))
        ->capture_default_str();
    add_digits_option(table_cmd, table_common);
    add_format_option(table_cmd, table_common);

    // --- central-diff -----------------------------------------------------
    CommonOptions diff_common;
    std::string diff_plus, diff_minus, diff_window;
    CLI::App* diff_cmd =
        app.add_subcommand("central-diff", "Symmetric difference quotient of two samples");
    diff_cmd->add_option("--f-plus", diff_plus, "Sample at the forward point")->required();
    diff_cmd->add_option("--f-minus", diff_minus, "Sample at the backward point")->required();
    diff_cmd->add_option("--window", diff_window, "Full spacing between the samples")
        ->required();
    add_digits_option(diff_cmd, diff_common);
    add_format_option(diff_cmd, diff_common);

    // --- sqrt -------------------------------------------------------------
    CommonOptions sqrt_common;
    std::string sqrt_n, sqrt_seed, sqrt_method = "both";
    unsigned sqrt_iters = 2;
    int sqrt_oracle_digits = 30;
    CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "Square-root refinement traces");
    sqrt_cmd->add_option("--n", sqrt_n, "Radicand, as p/q")->required();
    sqrt_cmd->add_option("--seed", sqrt_seed, "Starting value m")->required();
    sqrt_cmd->add_option("--method", sqrt_method, "Refinement scheme")
        ->check(CLI::IsMember({"bakshali", "heron", "both"}))
        ->capture_default_str();
    sqrt_cmd->add_option("--iters", sqrt_iters, "Iteration count")
        ->check(CLI::Range(1u, 1000u))
        ->capture_default_str();
    sqrt_cmd->add_option("--oracle-digits", sqrt_oracle_digits, "Comparison oracle precision")
        ->check(CLI::Range(1, 45))
        ->capture_default_str();
    add_digits_option(sqrt_cmd, sqrt_common);
    add_format_option(sqrt_cmd, sqrt_common);

    // --- reciprocal -------------------------------------------------------
    CommonOptions recip_common;
    std::string recip_x, recip_d;
    unsigned recip_terms = 0;
    CLI::App* recip_cmd =
        app.add_subcommand("reciprocal", "Geometric refinement of 1/(x - d)");
    recip_cmd->add_option("--x", recip_x, "Easy divisor x, as p/q")->required();
    recip_cmd->add_option("--d", recip_d, "Perturbation d, as p/q")->required();
    recip_cmd->add_option("--terms", recip_terms, "Correction terms M")->required();
    add_digits_option(recip_cmd, recip_common);
    add_format_option(recip_cmd, recip_common);

    // --- interpolate ------------------------------------------------------
    CommonOptions interp_common;
    std::string interp_theta, interp_theta_radians, interp_delta = "0";
    unsigned interp_order = 3;
    CLI::App* interp_cmd =
        app.add_subcommand("interpolate", "Stepped cosine interpolation of cos(theta+delta)");
    CLI::Option* theta_opt =
        interp_cmd->add_option("--theta", interp_theta, "Base angle as a multiple of pi, p/q");
    CLI::Option* theta_rad_opt = interp_cmd->add_option(
        "--theta-radians", interp_theta_radians, "Base angle in decimal radians");
    theta_opt->excludes(theta_rad_opt);
    interp_cmd->add_option("--delta-radians", interp_delta, "Step in decimal radians")
        ->capture_default_str();
    interp_cmd->add_option("--order", interp_order, "Interpolation order")
        ->check(CLI::Range(1u, 3u))
        ->capture_default_str();
    add_digits_option(interp_cmd, interp_common);
    add_format_option(interp_cmd, interp_common);

    // --- expand -----------------------------------------------------------
    CommonOptions expand_common;
    std::string expand_kind;
    unsigned expand_order = 0;
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "Dump a sine or cosine series expansion");
    expand_cmd->add_option("--kind", expand_kind, "Which function")
        ->check(CLI::IsMember({"sine", "cosine"}))
        ->required();
    expand_cmd->add_option("--order", expand_order, "Refinement count m")->required();
    add_format_option(expand_cmd, expand_common);

    // --- verify -----------------------------------------------------------
    CommonOptions verify_common;
    std::string verify_suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named invariant suite");
    verify_cmd->add_option("--suite", verify_suite, "Suite name")
        ->check(CLI::IsMember({"arith", "series", "refine", "powersum", "quadrant", "table", "all"}))
        ->capture_default_str();
    add_format_option(verify_cmd, verify_common);

    // --- parse and dispatch ----------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("madhava");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    Record record;
    int exit_code = exit_ok;
    try {
        if (pi_cmd->parsed()) {
            record.command = "pi";
            record.parameters = {{"terms", std::to_string(pi_terms)},
                                 {"method", pi_method},
                                 {"digits", std::to_string(pi_common.digits)},
                                 {"format", pi_common.format}};
            if (pi_method == "exact") {
                auto result = samkalitam::madhava_pi(pi_terms, pi_common.digits);
                record.columns = {{"pi_estimate", decimal_repr(pi_common.digits)},
                                  {"partial_sum", "rational"}};
                record.rows = {{result.pi_estimate.str(),
                                rational_cell(result.series.partial_sum)}};
                record.metadata = {
                    {"terms_used", "count", std::to_string(result.series.terms_used)},
                    {"error_bound", "rational",
                     rational_cell(Rational(4) * result.series.error_bound)}};
            } else {
                auto result = samkalitam::madhava_pi_decimal(pi_terms, pi_common.digits);
                record.columns = {{"pi_estimate", decimal_repr(pi_common.digits)}};
                record.rows = {{result.pi_estimate.str()}};
                record.metadata = {{"terms_used", "count", std::to_string(result.terms_used)},
                                   {"error_bound", "rational",
                                    rational_cell(result.error_bound)}};
            }
            emit(record, pi_common.format, out);
        } else if (arctan_cmd->parsed()) {
            record.command = "arctan";
            record.parameters = {{"t", arctan_t},
                                 {"terms", std::to_string(arctan_terms)},
                                 {"digits", std::to_string(arctan_common.digits)},
                                 {"format", arctan_common.format}};
            auto result = samkalitam::arctan_series(parse_rational(arctan_t), arctan_terms);
            record.columns = {{"partial_sum", "rational"},
                              {"angle", decimal_repr(arctan_common.digits)}};
            record.rows = {{rational_cell(result.partial_sum),
                            FixedDecimal::truncate_from(result.partial_sum, arctan_common.digits)
                                .str()}};
            record.metadata = {{"terms_used", "count", std::to_string(result.terms_used)},
                               {"error_bound", "rational", rational_cell(result.error_bound)}};
            emit(record, arctan_common.format, out);
        } else if (powersum_cmd->parsed()) {
            record.command = "powersum";
            record.parameters = {{"upper", std::to_string(ps_upper)},
                                 {"power", std::to_string(ps_power)},
                                 {"method", ps_method},
                                 {"format", powersum_common.format}};
            auto rec = ps_method == "direct" ? samkalitam::power_sum(ps_upper, ps_power)
                                             : samkalitam::power_sum_recursive(ps_upper, ps_power);
            record.columns = {{"sum", "rational"}, {"normalized", "rational"},
                              {"limit", "rational"}};
            record.rows = {{rec.sum.get_str(), rational_cell(rec.normalized),
                            rational_cell(rec.limit)}};
            emit(record, powersum_common.format, out);
        } else if (abel_cmd->parsed()) {
            record.command = "abel-check";
            record.parameters = {{"upper", std::to_string(abel_upper)},
                                 {"power", std::to_string(abel_power)},
                                 {"format", abel_common.format}};
            auto sides = samkalitam::abel_identity_check(abel_upper, abel_power);
            record.columns = {{"lhs", "rational"}, {"rhs", "rational"}, {"equal", ""}};
            record.rows = {{sides.lhs.get_str(), sides.rhs.get_str(),
                            sides.lhs == sides.rhs ? "true" : "false"}};
            emit(record, abel_common.format, out);
        } else if (jk_cmd->parsed()) {
            record.command = "jk-deviation";
            record.parameters = {{"upper", std::to_string(jk_upper)},
                                 {"power", std::to_string(jk_power)},
                                 {"format", jk_common.format}};
            auto rec = samkalitam::power_sum(jk_upper, jk_power);
            Rational deviation = rec.normalized - rec.limit;
            record.columns = {{"deviation", "rational"},
                              {"scaled_deviation", "rational"},
                              {"normalized", "rational"},
                              {"limit", "rational"}};
            record.rows = {{rational_cell(deviation),
                            rational_cell(Rational(Integer(jk_upper)) * deviation),
                            rational_cell(rec.normalized), rational_cell(rec.limit)}};
            emit(record, jk_common.format, out);
        } else if (quadrant_cmd->parsed()) {
            record.command = "quadrant";
            record.parameters = {{"segments", std::to_string(quad_segments)},
                                 {"index", std::to_string(quad_index)},
                                 {"oracle-digits", std::to_string(quad_oracle_digits)},
                                 {"digits", std::to_string(quadrant_common.digits)},
                                 {"format", quadrant_common.format}};
            auto sample =
                samkalitam::quadrant_geometry(quad_segments, quad_index, quad_oracle_digits);
            const int d = quadrant_common.digits;
            record.columns = {{"oa_sq_prev", "rational"},
                              {"oa_sq", "rational"},
                              {"predicted_sin_delta", "rational"},
                              {"refined_prediction", decimal_repr(d)},
                              {"true_sin_delta", decimal_repr(d)}};
            record.rows = {{rational_cell(sample.oa_sq_prev), rational_cell(sample.oa_sq),
                            rational_cell(sample.predicted_sin_delta),
                            FixedDecimal::truncate_from(sample.refined_prediction, d).str(),
                            FixedDecimal::truncate_from(sample.true_sin_delta, d).str()}};
            emit(record, quadrant_common.format, out);
        } else if (table_cmd->parsed()) {
            record.command = "sine-table";
            record.parameters = {{"step", table_step},
                                 {"count", std::to_string(table_count)},
                                 {"seed", table_seed},
                                 {"kind", table_kind},
                                 {"digits", std::to_string(table_common.digits)},
                                 {"format", table_common.format}};
            const Rational step = parse_rational(table_step);
            aryabhata::SineTable table;
            if (table_kind == "cosine") {
                table = aryabhata::generate_cosine_table(step, table_count, table_common.digits);
            } else {
                aryabhata::SeedPolicy policy = table_seed == "oracle"
                                                   ? aryabhata::SeedPolicy::oracle
                                               : table_seed == "two-term"
                                                   ? aryabhata::SeedPolicy::two_term
                                                   : aryabhata::SeedPolicy::epsilon;
                table = aryabhata::generate_sine_table(step, table_count, table_common.digits,
                                                       policy);
            }
            record.columns = {{"index", "count"},
                              {"angle_pi_multiple", "rational"},
                              {"value", decimal_repr(table_common.digits)}};
            for (const auto& entry : table.entries)
                record.rows.push_back({std::to_string(entry.index),
                                       rational_cell(entry.angle_pi_multiple),
                                       entry.value.str()});
            record.metadata = {{"difference_multiplier", "rational",
                                rational_cell(table.difference_multiplier)}};
            emit(record, table_common.format, out);
        } else if (diff_cmd->parsed()) {
            record.command = "central-diff";
            record.parameters = {{"f-plus", diff_plus},
                                 {"f-minus", diff_minus},
                                 {"window", diff_window},
                                 {"digits", std::to_string(diff_common.digits)},
                                 {"format", diff_common.format}};
            FixedDecimal estimate = aryabhata::central_first_derivative(
                parse_decimal(diff_plus), parse_decimal(diff_minus), parse_decimal(diff_window),
                diff_common.digits);
            record.columns = {{"estimate", decimal_repr(diff_common.digits)}};
            record.rows = {{estimate.str()}};
            emit(record, diff_common.format, out);
        } else if (sqrt_cmd->parsed()) {
            record.command = "sqrt";
            record.parameters = {{"n", sqrt_n},
                                 {"seed", sqrt_seed},
                                 {"method", sqrt_method},
                                 {"iters", std::to_string(sqrt_iters)},
                                 {"oracle-digits", std::to_string(sqrt_oracle_digits)},
                                 {"digits", std::to_string(sqrt_common.digits)},
                                 {"format", sqrt_common.format}};
            const Rational n = parse_rational(sqrt_n);
            const Rational seed = parse_rational(sqrt_seed);
            const int d = sqrt_common.digits;
            record.columns = {{"method", ""},
                              {"step", "count"},
                              {"value", "rational"},
                              {"approx", decimal_repr(d)}};
            auto push_trace = [&record, d](const samskaram::RefinementTrace& trace) {
                record.rows.push_back({trace.method_tag, "0", rational_cell(trace.seed),
                                       FixedDecimal::truncate_from(trace.seed, d).str()});
                for (std::size_t j = 0; j < trace.iterates.size(); ++j)
                    record.rows.push_back(
                        {trace.method_tag, std::to_string(j + 1),
                         rational_cell(trace.iterates[j]),
                         FixedDecimal::truncate_from(trace.iterates[j], d).str()});
            };
            if (sqrt_method == "both") {
                auto comparison =
                    samskaram::compare_sqrt_methods(n, seed, sqrt_iters, sqrt_oracle_digits);
                push_trace(comparison.bakshali);
                push_trace(comparison.heron);
                record.metadata = {
                    {"closer", "",
                     comparison.closer == 0 ? "equal"
                                            : (comparison.closer < 0 ? "bakshali" : "heron")},
                    {"bakshali_error", "rational", rational_cell(comparison.bakshali_error)},
                    {"heron_error", "rational", rational_cell(comparison.heron_error)}};
            } else if (sqrt_method == "bakshali") {
                push_trace(samskaram::sqrt_bakshali(n, seed, sqrt_iters));
            } else {
                push_trace(samskaram::sqrt_heron(n, seed, sqrt_iters));
            }
            emit(record, sqrt_common.format, out);
        } else if (recip_cmd->parsed()) {
            record.command = "reciprocal";
            record.parameters = {{"x", recip_x},
                                 {"d", recip_d},
                                 {"terms", std::to_string(recip_terms)},
                                 {"digits", std::to_string(recip_common.digits)},
                                 {"format", recip_common.format}};
            Rational value = samskaram::refine_reciprocal(parse_rational(recip_x),
                                                          parse_rational(recip_d), recip_terms);
            record.columns = {{"value", "rational"},
                              {"approx", decimal_repr(recip_common.digits)}};
            record.rows = {{rational_cell(value),
                            FixedDecimal::truncate_from(value, recip_common.digits).str()}};
            emit(record, recip_common.format, out);
        } else if (interp_cmd->parsed()) {
            record.command = "interpolate";
            record.parameters.clear();
            if (!interp_theta.empty())
                record.parameters.emplace_back("theta", interp_theta);
            if (!interp_theta_radians.empty())
                record.parameters.emplace_back("theta-radians", interp_theta_radians);
            record.parameters.emplace_back("delta-radians", interp_delta);
            record.parameters.emplace_back("order", std::to_string(interp_order));
            record.parameters.emplace_back("digits", std::to_string(interp_common.digits));
            record.parameters.emplace_back("format", interp_common.format);
            if (interp_theta.empty() && interp_theta_radians.empty())
                throw std::invalid_argument("interpolate: provide --theta or --theta-radians");
            const Rational theta =
                !interp_theta.empty()
                    ? parse_rational(interp_theta) * pi_rational(pi_digits_available)
                    : parse_decimal(interp_theta_radians).to_rational();
            const Rational delta = parse_decimal(interp_delta).to_rational();
            FixedDecimal value = samskaram::cosine_interpolate(theta, delta, interp_order,
                                                               interp_common.digits);
            auto coefficients = samskaram::cosine_interpolation_coefficients(interp_order);
            record.columns = {{"power", "count"},
                              {"cos_coefficient", "rational"},
                              {"sin_coefficient", "rational"}};
            for (std::size_t p = 0; p < coefficients.size(); ++p)
                record.rows.push_back({std::to_string(p),
                                       rational_cell(coefficients[p].cos_coefficient),
                                       rational_cell(coefficients[p].sin_coefficient)});
            record.metadata = {{"value", decimal_repr(interp_common.digits), value.str()}};
            emit(record, interp_common.format, out);
        } else if (expand_cmd->parsed()) {
            record.command = "expand";
            record.parameters = {{"kind", expand_kind},
                                 {"order", std::to_string(expand_order)},
                                 {"format", expand_common.format}};
            auto kind = expand_kind == "sine" ? series::TrigKind::sine : series::TrigKind::cosine;
            auto expansion = series::expansion(kind, expand_order);
            record.columns = {{"degree", "count"}, {"coefficient", "rational"}};
            for (const auto& [degree, coefficient] : expansion.polynomial.terms())
                record.rows.push_back({std::to_string(degree), rational_cell(coefficient)});
            record.metadata = {{"polynomial", "", expansion.polynomial.str()}};
            emit(record, expand_common.format, out);
        } else if (verify_cmd->parsed()) {
            record.command = "verify";
            record.parameters = {{"suite", verify_suite}, {"format", verify_common.format}};
            std::vector<std::pair<std::string, std::vector<Check>>> suites;
            auto want = [&verify_suite](const char* name) {
                return verify_suite == "all" || verify_suite == name;
            };
            if (want("arith")) suites.emplace_back("arith", arith_checks());
            if (want("series")) suites.emplace_back("series", series_checks());
            if (want("refine")) suites.emplace_back("refine", refine_checks());
            if (want("powersum")) suites.emplace_back("powersum", powersum_checks());
            if (want("quadrant")) suites.emplace_back("quadrant", quadrant_checks());
            if (want("table")) suites.emplace_back("table", table_checks());
            unsigned passed = 0, failed = 0;
            record.columns = {{"suite", ""}, {"check", ""}, {"status", ""}};
            for (const auto& [suite_name, checks] : suites) {
                for (const auto& check : checks) {
                    bool ok = false;
                    try {
                        ok = check.body();
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    (ok ? passed : failed) += 1;
                    record.rows.push_back({suite_name, check.name, ok ? "pass" : "fail"});
                }
            }
            record.metadata = {{"passed", "count", std::to_string(passed)},
                               {"failed", "count", std::to_string(failed)}};
            emit(record, verify_common.format, out);
            if (failed > 0) exit_code = exit_domain;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_code;
}

}  // namespace madhava::cli
