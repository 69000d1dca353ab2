#include "tvcode/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvcode/coding.hpp"
#include "tvcode/core.hpp"
#include "tvcode/merge.hpp"
#include "tvcode/oracle.hpp"
#include "tvcode/waterfill.hpp"

namespace tvcode::cli {

namespace {

using nlohmann::json;

struct JobConfig {
    std::string input_path = "-";
    std::string format = "auto"; // input sniffing hint + trajectory output format
    std::optional<double> radius;
    std::optional<double> alpha;
    unsigned base = 2;
    int steps = 0;
    int trials = 100;
    std::uint64_t seed = 1;
    int precision = 12;
};

struct InputData {
    std::vector<double> probabilities;
    std::vector<std::string> symbols; // empty when the input carries no labels
    std::vector<double> second;       // metrics: optional second distribution
};

// ---------------------------------------------------------------- formatting

double round_sig(double v, int digits) {
    if (!std::isfinite(v)) return v;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return std::strtod(buf, nullptr);
}

std::string fmt_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

json rounded_array(std::span<const double> v, int digits) {
    json arr = json::array();
    for (double x : v) arr.push_back(round_sig(x, digits));
    return arr;
}

// ------------------------------------------------------------------- input

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<double> json_number_array(const json& j, const std::string& field) {
    if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument("field '" + field + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

InputData parse_json_input(const std::string& text) {
    const json j = json::parse(text); // parse_error propagates -> exit 2
    if (!j.is_object()) throw std::invalid_argument("input JSON must be an object");

    InputData in;
    if (j.contains("p") && j.contains("q")) {
        in.probabilities = json_number_array(j.at("p"), "p");
        in.second = json_number_array(j.at("q"), "q");
    } else if (j.contains("probabilities")) {
        in.probabilities = json_number_array(j.at("probabilities"), "probabilities");
        if (j.contains("q")) in.second = json_number_array(j.at("q"), "q");
    } else {
        throw std::invalid_argument("input JSON needs a 'probabilities' array (or 'p' and 'q')");
    }
    if (j.contains("symbols")) {
        const auto& syms = j.at("symbols");
        if (!syms.is_array() || syms.size() != in.probabilities.size())
            throw std::invalid_argument("field 'symbols' must be an array matching 'probabilities'");
        for (const auto& s : syms) {
            if (!s.is_string()) throw std::invalid_argument("field 'symbols' must contain only strings");
            in.symbols.push_back(s.get<std::string>());
        }
    }
    return in;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

// One probability per line. A second column is either a label or, when every
// line's second column is numeric, a second distribution (metrics input).
InputData parse_csv_input(const std::string& text) {
    InputData in;
    std::vector<std::string> col2;
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto comma = t.find(',');
        const std::string first = comma == std::string::npos ? t : t.substr(0, comma);
        double p = 0.0;
        if (!parse_number(first, p))
            throw std::invalid_argument("csv line " + std::to_string(lineno) +
                                        ": cannot parse probability '" + trim(first) + "'");
        in.probabilities.push_back(p);
        if (comma != std::string::npos) {
            const std::string rest = trim(t.substr(comma + 1));
            if (rest.find(',') != std::string::npos)
                throw std::invalid_argument("csv line " + std::to_string(lineno) +
                                            ": expected at most two columns");
            col2.push_back(rest);
        } else {
            col2.push_back({});
        }
    }
    const bool any_second = std::any_of(col2.begin(), col2.end(),
                                        [](const std::string& s) { return !s.empty(); });
    if (!any_second) return in;

    bool all_numeric = true;
    std::vector<double> numbers(col2.size());
    for (std::size_t i = 0; i < col2.size(); ++i)
        if (!parse_number(col2[i], numbers[i])) {
            all_numeric = false;
            break;
        }
    if (all_numeric)
        in.second = std::move(numbers);
    else
        in.symbols = std::move(col2);
    return in;
}

// use_format_hint is false for trajectory, where --format selects the
// OUTPUT format and the input is always sniffed.
InputData load_input(const JobConfig& cfg, bool use_format_hint = true) {
    const std::string text = read_all(cfg.input_path);
    std::string fmt = use_format_hint ? cfg.format : "auto";
    if (fmt == "auto") {
        const std::string t = trim(text);
        fmt = (!t.empty() && (t.front() == '{' || t.front() == '[')) ? "json" : "csv";
    }
    return fmt == "json" ? parse_json_input(text) : parse_csv_input(text);
}

BallSpec make_spec(const JobConfig& cfg) {
    if (cfg.alpha) return BallSpec::from_alpha(*cfg.alpha, cfg.base);
    return BallSpec::from_radius(cfg.radius.value_or(0.0), cfg.base);
}

// Metrics accepts zeros, so this is a lighter check than validate_nominal.
std::vector<double> validate_metric_dist(std::vector<double> p, const char* name) {
    if (p.empty()) throw std::invalid_argument(std::string(name) + ": empty distribution");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!(p[i] >= 0.0))
            throw NonPositiveProbability(std::string(name) + ": entry " + std::to_string(i) +
                                         " is negative");
    double total = 0.0;
    for (double v : p) total += v;
    if (!(std::abs(total - 1.0) <= kNormalizationTolerance))
        throw NotNormalized(std::string(name) + ": probabilities sum to " +
                            std::to_string(total));
    for (double& v : p) v /= total;
    return p;
}

std::vector<std::string> group_labels(const WeightVector& w) {
    const std::size_t n = w.weights.size();
    std::vector<std::string> g(n, "middle");
    for (std::size_t i = 0; i < w.top_count && i < n; ++i) g[i] = "top";
    for (std::size_t i = n - std::min(w.bottom_count, n); i < n; ++i) g[i] = "bottom";
    return g;
}

// ------------------------------------------------------------------ design

int cmd_design(const JobConfig& cfg, std::ostream& out) {
    const InputData in = load_input(cfg);
    const NominalDistribution mu = validate_nominal(in.probabilities);
    const BallSpec spec = make_spec(cfg);
    const coding::CodeDesign d = coding::design(mu, spec);
    const merge::BreakpointSchedule sched = merge::build_schedule(mu);
    const int P = cfg.precision;

    json rep;
    rep["alphabet_size"] = mu.size();
    rep["radius"] = round_sig(spec.radius, P);
    rep["alpha"] = round_sig(spec.alpha, P);
    rep["base"] = spec.base;
    rep["alpha_max"] = round_sig(sched.alpha_max, P);
    rep["probabilities"] = rounded_array(mu.to_caller_order(mu.probs()), P);
    if (!in.symbols.empty()) rep["symbols"] = in.symbols;
    rep["weights"] = rounded_array(mu.to_caller_order(d.weights.weights), P);
    rep["real_lengths"] = rounded_array(mu.to_caller_order(d.real_lengths.lengths), P);
    rep["integer_lengths"] = rounded_array(mu.to_caller_order(d.integer_lengths.lengths), P);
    rep["worst_case_average_length"] = round_sig(d.worst_case_avg_length, P);
    rep["integer_worst_case_average_length"] =
        round_sig(coding::worst_case_payoff(d.integer_lengths, mu, spec), P);
    rep["entropy_of_weights"] = round_sig(d.entropy_of_weights, P);
    rep["top_count"] = d.weights.top_count;
    rep["bottom_count"] = d.weights.bottom_count;
    {
        const auto labels = group_labels(d.weights);
        std::vector<std::string> caller(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) caller[mu.order()[i]] = labels[i];
        rep["groups"] = caller;
    }
    out << rep.dump(2) << '\n';
    return 0;
}

// -------------------------------------------------------------- trajectory

int cmd_trajectory(const JobConfig& cfg, std::ostream& out) {
    const InputData in = load_input(cfg, /*use_format_hint=*/false);
    const NominalDistribution mu = validate_nominal(in.probabilities);
    const merge::BreakpointSchedule sched = merge::build_schedule(mu);
    const int P = cfg.precision;

    std::vector<double> breakpoints{0.0};
    for (const auto& ev : sched.events) breakpoints.push_back(ev.alpha);
    breakpoints.push_back(sched.alpha_max);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                  [](double a, double b) { return std::abs(a - b) <= 1e-15; }),
                      breakpoints.end());

    struct Row {
        double alpha;
        bool breakpoint;
    };
    std::vector<Row> grid;
    for (double a : breakpoints) grid.push_back({a, true});
    for (int j = 1; j <= cfg.steps; ++j) {
        const double a = sched.alpha_max * j / (cfg.steps + 1);
        const bool dup = std::any_of(breakpoints.begin(), breakpoints.end(),
                                     [a](double b) { return std::abs(a - b) <= 1e-15; });
        if (!dup) grid.push_back({a, false});
    }
    std::sort(grid.begin(), grid.end(),
              [](const Row& a, const Row& b) { return a.alpha < b.alpha; });

    const std::size_t n = mu.size();
    const bool csv = cfg.format == "csv";
    json rows = json::array();
    if (csv) out << "alpha,symbol,weight,breakpoint\n";
    for (const Row& r : grid) {
        const WeightVector w =
            merge::compute_weights(mu, BallSpec::from_alpha(r.alpha, cfg.base));
        const std::vector<double> caller = mu.to_caller_order(w.weights);
        for (std::size_t s = 0; s < n; ++s) {
            if (csv) {
                out << fmt_sig(r.alpha, P) << ',' << s << ',' << fmt_sig(caller[s], P)
                    << ',' << (r.breakpoint ? 1 : 0) << '\n';
            } else {
                rows.push_back({{"alpha", round_sig(r.alpha, P)},
                                {"symbol", s},
                                {"weight", round_sig(caller[s], P)},
                                {"breakpoint", r.breakpoint}});
            }
        }
    }
    if (!csv) {
        json rep;
        rep["alpha_max"] = round_sig(sched.alpha_max, P);
        rep["rows"] = rows;
        out << rep.dump(2) << '\n';
    }
    return 0;
}

// ----------------------------------------------------------------- metrics

int cmd_metrics(const JobConfig& cfg, std::ostream& out) {
    const InputData in = load_input(cfg);
    const std::vector<double> p = validate_metric_dist(in.probabilities, "p");
    const int P = cfg.precision;

    json rep;
    rep["base"] = cfg.base;
    rep["entropy_p"] = round_sig(entropy(p, cfg.base), P);
    if (!in.second.empty()) {
        const std::vector<double> q = validate_metric_dist(in.second, "q");
        if (q.size() != p.size())
            throw DimensionMismatch("p and q must have the same length");
        rep["entropy_q"] = round_sig(entropy(q, cfg.base), P);
        const double tv = tv_distance(p, q);
        rep["tv_distance"] = round_sig(tv, P);
        auto kl_or_infinite = [](std::span<const double> a,
                                 std::span<const double> b) -> std::optional<double> {
            try {
                return kl_divergence(a, b);
            } catch (const SupportViolation&) {
                return std::nullopt; // divergence is infinite
            }
        };
        const auto kl_pq = kl_or_infinite(p, q);
        const auto kl_qp = kl_or_infinite(q, p);
        rep["kl_pq_nats"] = kl_pq ? json(round_sig(*kl_pq, P)) : json(nullptr);
        rep["kl_qp_nats"] = kl_qp ? json(round_sig(*kl_qp, P)) : json(nullptr);
        // The bound is evaluated on the unrounded values; rounding is for
        // display only.
        json pinsker;
        pinsker["tv_squared"] = round_sig(tv * tv, P);
        if (!kl_pq) {
            pinsker["two_kl"] = nullptr;
            pinsker["satisfied"] = true; // tv^2 <= 2 * infinity
        } else {
            pinsker["two_kl"] = round_sig(2.0 * *kl_pq, P);
            pinsker["satisfied"] = tv * tv <= 2.0 * *kl_pq + 1e-12;
        }
        rep["pinsker"] = pinsker;
    }
    out << rep.dump(2) << '\n';
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyState {
    json violations = json::array();
    std::size_t checks = 0;

    void check(bool ok, const char* name, std::span<const double> probs, double alpha,
               unsigned base, const std::string& detail) {
        ++checks;
        if (ok) return;
        json v;
        v["check"] = name;
        v["probabilities"] = std::vector<double>(probs.begin(), probs.end()); // full precision
        v["alpha"] = alpha;
        v["base"] = base;
        v["detail"] = detail;
        violations.push_back(v);
    }
};

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void verify_instance(VerifyState& vs, std::span<const double> raw, double alpha,
                     unsigned base, bool enumeration_allowed, std::uint64_t sample_seed) {
    const NominalDistribution mu = validate_nominal(raw);
    const BallSpec spec = BallSpec::from_alpha(alpha, base);
    const std::size_t n = mu.size();

    merge::MergeStats stats;
    const WeightVector mg = merge::compute_weights(mu, spec, &stats);
    const WeightVector wf = waterfill::waterfill_weights(mu, spec);
    vs.check(max_abs_diff(mg.weights, wf.weights) <= 1e-9, "waterfill_merge_agreement",
             raw, alpha, base,
             "max componentwise gap " + std::to_string(max_abs_diff(mg.weights, wf.weights)));
    vs.check(stats.iterations <= n, "merge_iterations", raw, alpha, base,
             "schedule loop ran " + std::to_string(stats.iterations) + " iterations");

    const coding::CodeDesign d = coding::design(mu, spec);
    const double kraft_real = kraft_sum(d.real_lengths);
    vs.check(std::abs(kraft_real - 1.0) <= 1e-12, "kraft_equality", raw, alpha, base,
             "real-length Kraft sum " + std::to_string(kraft_real));
    const double kraft_int = kraft_sum(d.integer_lengths);
    vs.check(kraft_int <= 1.0 + 1e-12, "kraft_inequality", raw, alpha, base,
             "integer-length Kraft sum " + std::to_string(kraft_int));

    const double H = d.entropy_of_weights;
    const double avg_int = coding::average_length(d.integer_lengths, d.weights.weights);
    vs.check(avg_int >= H - 1e-12 && avg_int < H + 1.0, "entropy_sandwich", raw, alpha,
             base, "H " + std::to_string(H) + ", integer average " + std::to_string(avg_int));
    vs.check(std::abs(d.worst_case_avg_length - H) <= 1e-10, "payoff_identity", raw,
             alpha, base,
             "worst case " + std::to_string(d.worst_case_avg_length) + " vs entropy " +
                 std::to_string(H));

    if (enumeration_allowed && n <= oracle::kMaxEnumerationAlphabet) {
        const auto part = oracle::enumerate_partitions(mu, spec);
        vs.check(std::abs(part.best_payoff - d.worst_case_avg_length) <= 1e-9 &&
                     max_abs_diff(part.best_weights.weights, d.weights.weights) <= 1e-9,
                 "oracle_equivalence", raw, alpha, base,
                 "payoff gap " + std::to_string(part.best_payoff - d.worst_case_avg_length));
    }

    // Greedy ball maximizer against the closed form (equality only while the
    // simplex caps stay inactive).
    const auto ball = oracle::maximize_over_ball(d.real_lengths, mu, spec);
    const double closed = coding::worst_case_payoff(d.real_lengths, mu, spec);
    const auto [l_min, l_max] = std::minmax_element(d.real_lengths.lengths.begin(),
                                                    d.real_lengths.lengths.end());
    double min_group_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (d.real_lengths.lengths[i] <= *l_min + 1e-15) min_group_mass += mu.probs()[i];
    const std::size_t argmax =
        static_cast<std::size_t>(l_max - d.real_lengths.lengths.begin());
    const bool caps_inactive =
        alpha <= min_group_mass && alpha <= 1.0 - mu.probs()[argmax];
    if (caps_inactive)
        vs.check(std::abs(ball.payoff - closed) <= 1e-10, "maximizer_closed_form", raw,
                 alpha, base, "greedy " + std::to_string(ball.payoff) + " vs closed " +
                                  std::to_string(closed));
    else
        vs.check(ball.payoff <= closed + 1e-10, "maximizer_upper_bound", raw, alpha, base,
                 "greedy " + std::to_string(ball.payoff) + " above closed form " +
                     std::to_string(closed));
    vs.check(tv_distance(ball.nu_star, mu.probs()) <= spec.radius + 1e-12,
             "maximizer_feasible", raw, alpha, base, "tv exceeds radius");

    for (const auto& s : oracle::sample_ball(mu, spec, 16, sample_seed)) {
        const double val = coding::average_length(d.real_lengths, s);
        vs.check(val <= ball.payoff + 1e-12, "maximizer_dominance", raw, alpha, base,
                 "sampled payoff " + std::to_string(val) + " beats greedy " +
                     std::to_string(ball.payoff));
        vs.check(tv_distance(s, mu.probs()) <= spec.radius + 1e-12, "sample_feasible",
                 raw, alpha, base, "sample left the ball");
    }
}

void verify_monotonicity(VerifyState& vs, std::span<const double> raw, unsigned base) {
    const NominalDistribution mu = validate_nominal(raw);
    const auto sched = merge::build_schedule(mu);
    std::vector<double> grid{0.0, sched.alpha_max, std::min(1.0, sched.alpha_max * 1.5), 1.0};
    for (const auto& ev : sched.events) grid.push_back(ev.alpha);
    for (std::size_t i = 0; i + 1 < sched.events.size(); ++i)
        grid.push_back(0.5 * (sched.events[i].alpha + sched.events[i + 1].alpha));
    if (!sched.events.empty()) {
        grid.push_back(0.5 * sched.events.front().alpha);
        grid.push_back(0.5 * (sched.events.back().alpha + sched.alpha_max));
    } else {
        grid.push_back(0.5 * sched.alpha_max);
    }
    std::sort(grid.begin(), grid.end());

    const auto p = mu.probs();
    double prev_top = p[0] + 1.0;
    double prev_bottom = -1.0;
    for (double a : grid) {
        if (!(a >= 0.0 && a <= 1.0)) continue;
        const WeightVector w = merge::compute_weights(mu, BallSpec::from_alpha(a, base));
        bool sorted = true;
        for (std::size_t i = 0; i + 1 < w.weights.size(); ++i)
            sorted = sorted && w.weights[i] >= w.weights[i + 1] - 1e-12;
        vs.check(sorted, "order_preservation", raw, a, base, "weights not sorted");

        bool middle_fixed = true;
        for (std::size_t i = w.top_count; i + w.bottom_count < w.weights.size(); ++i)
            middle_fixed = middle_fixed && std::abs(w.weights[i] - p[i]) <= 1e-12;
        vs.check(middle_fixed, "middle_weights_fixed", raw, a, base,
                 "a middle weight moved away from mu");

        vs.check(w.weights.front() <= prev_top + 1e-12, "top_weight_monotone", raw, a,
                 base, "top weight increased with alpha");
        vs.check(w.weights.back() >= prev_bottom - 1e-12, "bottom_weight_monotone", raw,
                 a, base, "bottom weight decreased with alpha");
        prev_top = w.weights.front();
        prev_bottom = w.weights.back();

        double total = 0.0;
        for (double v : w.weights) total += v;
        vs.check(std::abs(total - 1.0) <= 1e-12, "weights_normalized", raw, a, base,
                 "weights sum to " + std::to_string(total));
    }
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    const InputData in = load_input(cfg);
    VerifyState vs;

    const bool input_enumerable = in.probabilities.size() <= oracle::kMaxEnumerationAlphabet;
    if (!input_enumerable)
        err << "warning: alphabet has " << in.probabilities.size()
            << " symbols; partition enumeration is skipped beyond "
            << oracle::kMaxEnumerationAlphabet << "\n";

    // Given input: the requested alpha plus a small sweep.
    const double given_alpha = cfg.alpha.value_or(cfg.radius.value_or(0.0) / 2.0);
    const NominalDistribution mu = validate_nominal(in.probabilities);
    const auto sched = merge::build_schedule(mu);
    std::vector<double> alphas{given_alpha, 0.0, sched.alpha_max,
                               std::min(1.0, 0.5 * sched.alpha_max), 1.0};
    for (double a : alphas)
        verify_instance(vs, in.probabilities, a, cfg.base, input_enumerable, cfg.seed);
    verify_monotonicity(vs, in.probabilities, cfg.base);

    // Random trials.
    std::mt19937_64 rng(cfg.seed);
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int t = 0; t < cfg.trials; ++t) {
        const bool large = t % 5 == 4;
        const std::size_t n = large ? 2 + rng() % 63 : 2 + rng() % 9;
        std::vector<double> probs(n);
        if (t % 3 == 0) {
            // Small-integer grid: exercises tied probabilities.
            double total = 0.0;
            for (auto& v : probs) total += (v = 1.0 + static_cast<double>(rng() % 8));
            for (auto& v : probs) v /= total;
        } else {
            double total = 0.0;
            for (auto& v : probs) total += (v = -std::log1p(-unit()) + 1e-9);
            for (auto& v : probs) v /= total;
        }
        double a = unit();
        if (t % 7 == 0) a = 0.0;
        verify_instance(vs, probs, a, cfg.base, !large, cfg.seed + 1 + t);
        if (t % 4 == 0) verify_monotonicity(vs, probs, cfg.base);
    }

    json rep;
    rep["checks_run"] = vs.checks;
    rep["violations"] = vs.violations;
    rep["enumeration_skipped_for_input"] = !input_enumerable;
    rep["trials"] = cfg.trials;
    rep["seed"] = cfg.seed;
    out << rep.dump(2) << '\n';
    return vs.violations.empty() ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    JobConfig cfg;
    CLI::App app{"minimax prefix-code designer for total-variation uncertainty sets"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub, bool with_ball) {
        sub->add_option("--input", cfg.input_path, "input file, or - for stdin")
            ->capture_default_str();
        sub->add_option("--precision", cfg.precision, "significant digits in reports")
            ->check(CLI::Range(1, 17))
            ->capture_default_str();
        sub->add_option("--base", cfg.base, "code alphabet size D")
            ->check(CLI::Range(2u, 1u << 20))
            ->capture_default_str();
        if (with_ball) {
            auto* r = sub->add_option("--radius", cfg.radius, "TV ball radius R in [0,2]");
            auto* a = sub->add_option("--alpha", cfg.alpha, "half radius in [0,1]");
            r->excludes(a);
            a->excludes(r);
        }
    };

    const auto format_values = CLI::IsMember({"auto", "json", "csv"});
    CLI::App* design = app.add_subcommand("design", "compute the minimax code for one ball");
    add_common(design, true);
    design->add_option("--format", cfg.format, "input format override (default: sniff)")
        ->check(format_values);
    CLI::App* trajectory =
        app.add_subcommand("trajectory", "weights at every breakpoint and sampled alphas");
    add_common(trajectory, false);
    trajectory->add_option("--format", cfg.format, "output format: json or csv")
        ->check(format_values);
    trajectory->add_option("--steps", cfg.steps, "interior samples between 0 and alpha_max")
        ->check(CLI::Range(0, 1 << 20))
        ->capture_default_str();
    CLI::App* verify =
        app.add_subcommand("verify", "cross-check both solvers and the brute-force oracles");
    add_common(verify, true);
    verify->add_option("--format", cfg.format, "input format override (default: sniff)")
        ->check(format_values);
    verify->add_option("--trials", cfg.trials, "number of random instances")
        ->check(CLI::Range(0, 1 << 20))
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    CLI::App* metrics =
        app.add_subcommand("metrics", "TV distance, KL divergence, entropy, Pinsker check");
    add_common(metrics, false);
    metrics->add_option("--format", cfg.format, "input format override (default: sniff)")
        ->check(format_values);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(design)) return cmd_design(cfg, out);
        if (app.got_subcommand(trajectory)) return cmd_trajectory(cfg, out);
        if (app.got_subcommand(verify)) return cmd_verify(cfg, out, err);
        if (app.got_subcommand(metrics)) return cmd_metrics(cfg, out);
    } catch (const nlohmann::json::parse_error& e) {
        err << "error: input is not valid JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // no subcommand matched; require_subcommand makes this unreachable
}

} // namespace tvcode::cli
