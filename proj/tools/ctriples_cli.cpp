// ctriples: compute and cross-check the coefficient sequence T(n)/n! of
// commuting-triple counts in the symmetric groups.
//
// Exit codes: 0 success / verified, 1 mathematical disagreement,
// 2 I/O failure, 3 resource-cap refusal, 4 invalid arguments.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ctriples/ctriples.hpp>

namespace {

using namespace ctriples;

enum ExitCode : int { kOk = 0, kDisagreement = 1, kIoError = 2, kCapRefused = 3, kBadArgs = 4 };

struct OutputOptions {
    std::string format = "bfile";
    std::string out;
    bool no_meta = false;
};

struct CapOptions {
    std::size_t naive = Caps{}.naive;
    std::size_t centralizer = Caps{}.centralizer;
    std::size_t wreath = Caps{}.wreath;

    Caps caps() const { return Caps{naive, centralizer, wreath}; }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"bfile", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Output path (default stdout)");
    cmd->add_flag("--no-meta", opts.no_meta, "Omit metadata (JSON emits the bare array)");
}

void add_cap_options(CLI::App* cmd, CapOptions& caps) {
    cmd->add_option("--naive-cap", caps.naive, "Largest degree for the naive triple loop")->capture_default_str();
    cmd->add_option("--cent-cap", caps.centralizer, "Largest degree for centralizer-method enumeration")
        ->capture_default_str();
    cmd->add_option("--wreath-cap", caps.wreath, "Largest |W(t,m)| for brute-force enumeration")
        ->capture_default_str();
}

/// Renders into a buffer first so a failed open leaves nothing half-written.
int emit(const OutputOptions& opts, const std::string& text) {
    if (opts.out.empty() || opts.out == "-") {
        std::cout << text << std::flush;
        return std::cout ? kOk : kIoError;
    }
    std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "error: cannot open '" << opts.out << "' for writing\n";
        return kIoError;
    }
    file << text;
    file.flush();
    if (!file) {
        std::cerr << "error: write to '" << opts.out << "' failed\n";
        return kIoError;
    }
    return kOk;
}

int emit_sequence(const OutputOptions& opts, std::span<const BigInt> values, const std::string& method,
                  std::size_t order) {
    std::ostringstream buf;
    write_sequence(buf, values, parse_format(opts.format), SequenceMeta{method, order, !opts.no_meta});
    return emit(opts, buf.str());
}

std::vector<std::uint64_t> sigma_with_overrides(std::size_t order, const std::vector<std::string>& overrides) {
    auto table = numtheory::sigma_table(order);
    for (const auto& spec : overrides) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw DomainError("--sigma-override expects J=VALUE, got '" + spec + "'");
        const auto j = std::stoull(spec.substr(0, eq));
        const auto v = std::stoull(spec.substr(eq + 1));
        if (j < 1) throw DomainError("--sigma-override index must be >= 1");
        if (j <= order) table[j] = v;
    }
    return table;
}

std::string yes_no(bool b) { return b ? "ok" : "FAILED"; }

int run_verify(std::size_t order, std::size_t brute_max, const CapOptions& cap_opts,
               const std::vector<std::string>& overrides, std::size_t suite_t_max) {
    const Caps caps = cap_opts.caps();
    // Refuse before doing any work.
    if (brute_max > caps.centralizer)
        throw ResourceLimitError("cent-cap", caps.centralizer, "brute-max " + std::to_string(brute_max) + " above cap");
    if (brute_max > order) throw DomainError("--brute-max must not exceed --order");

    bool all_ok = true;
    std::ostream& out = std::cout;

    std::optional<std::vector<std::uint64_t>> sigma;
    if (!overrides.empty()) sigma = sigma_with_overrides(order, overrides);
    const auto report = verify_identity(order, brute_max, caps, sigma);
    out << "identity: product vs classes to order " << order << ", vs brute force to n=" << brute_max << ": ";
    if (report.overall) {
        out << "agree\n";
    } else {
        const auto i = *report.first_disagreement();
        out << "DISAGREE at coefficient index " << i << " (product=" << report.coeffs_product[i]
            << " classes=" << report.coeffs_classes[i];
        if (i <= brute_max) out << " brute=" << report.coeffs_brute[i];
        out << ")\n";
        all_ok = false;
    }

    if (order >= 1) {
        const auto lc = verify_log(order);
        out << "log: formal log vs divisor formula for d=1.." << order << ": ";
        if (lc.ok) out << "agree\n";
        else out << "DISAGREE at d=" << *lc.first_mismatch << "\n";
        all_ok = all_ok && lc.ok;
    }

    const std::size_t naive_max = std::min(brute_max, caps.naive);
    std::optional<std::size_t> naive_bad;
    for (std::size_t n = 0; n <= naive_max && !naive_bad; ++n)
        if (triples_naive(n, caps) != triples_centralizer(n, caps)) naive_bad = n;
    out << "triples: naive vs centralizer method for n<=" << naive_max << ": ";
    if (naive_bad) out << "DISAGREE at n=" << *naive_bad << "\n";
    else out << "agree\n";
    all_ok = all_ok && !naive_bad;

    const std::size_t max_degree = std::min<std::size_t>(6, caps.centralizer);
    const auto pairs = check_commuting_pairs(max_degree, suite_t_max, caps.wreath, caps);
    out << "commuting pairs = |G|k(G) on " << pairs.checks.size() << " groups: " << yes_no(pairs.ok());
    if (const auto* f = pairs.first_failure()) out << " (first failure " << f->group << ": " << f->detail << ")";
    out << "\n";
    all_ok = all_ok && pairs.ok();

    const auto conj = check_wreath_conjugacy(suite_t_max, std::min<std::size_t>(2000, caps.wreath), caps);
    out << "wreath conjugacy = cycle-sum invariants on " << conj.checks.size() << " groups: " << yes_no(conj.ok());
    if (const auto* f = conj.first_failure()) out << " (first failure " << f->group << ": " << f->detail << ")";
    out << "\n";
    all_ok = all_ok && conj.ok();

    out << (all_ok ? "VERIFIED" : "FAILED") << "\n";
    return all_ok ? kOk : kDisagreement;
}

int run_wreath(std::size_t t, std::size_t m, bool brute, const CapOptions& cap_opts) {
    if (t < 1) throw DomainError("-t must be >= 1");
    const BigInt k = k_wreath(t, m);
    std::cout << "k=" << k;
    if (brute) {
        const auto classes = conjugacy_classes_brute(t, m, cap_opts.caps());
        const bool match = k == classes.count();
        std::cout << ", brute=" << classes.count() << ", " << (match ? "match" : "MISMATCH") << "\n";
        return match ? kOk : kDisagreement;
    }
    std::cout << "\n";
    return kOk;
}

int run_log_check(std::size_t order) {
    const auto check = verify_log(order);
    for (std::size_t d = 1; d <= order; ++d) std::cout << d << ' ' << check.log_series[d] << '\n';
    if (check.ok) {
        std::cout << "log coefficients match (sum_{a|d} a*sigma(a))/d for d=1.." << order << "\n";
        return kOk;
    }
    std::cout << "MISMATCH at d=" << *check.first_mismatch << ": log gives " << check.log_series[*check.first_mismatch]
              << ", divisor formula gives "
              << numtheory::log_coefficient(static_cast<std::int64_t>(*check.first_mismatch)) << "\n";
    return kDisagreement;
}

int run_bound_check(std::int64_t d_max) {
    const auto report = numtheory::bound_check(d_max);
    const auto& first = report.rows.front();
    std::cout << "d=1: lhs=" << first.lhs << " rhs=" << first.rhs
              << (report.equality_at_one ? " (equality; the strict bound is checked from d=2)" : "") << "\n";
    if (report.holds_from_two()) {
        std::cout << "sum_{a|d} a*sigma(a) < d^4 holds for all 2<=d<=" << d_max << "\n";
        return kOk;
    }
    std::cout << report.failures.size() << " failures, first at d=" << report.failures.front() << "\n";
    return kDisagreement;
}

int run_growth(std::size_t order) {
    std::cout << "n coeff nth_root\n" << std::fixed << std::setprecision(6);
    for (const auto& row : growth_report(order)) std::cout << row.n << ' ' << row.coeff << ' ' << row.nth_root << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Commuting triples in symmetric groups: series expansion and cross-verification"};
    app.require_subcommand(1);

    std::size_t order = 20;
    std::size_t brute_max = 6;
    OutputOptions out_opts;
    CapOptions cap_opts;

    auto* expand = app.add_subcommand("expand", "Coefficients of prod_j (1-u^j)^(-sigma(j))");
    expand->add_option("-N,--order", order, "Truncation order")->capture_default_str();
    add_output_options(expand, out_opts);

    auto* classes = app.add_subcommand("classes", "Coefficients via centralizer class counts");
    classes->add_option("-N,--order", order, "Truncation order")->capture_default_str();
    add_output_options(classes, out_opts);

    auto* brute = app.add_subcommand("brute", "T(n)/n! by brute-force enumeration of S_n");
    brute->add_option("-K,--brute-max", brute_max, "Largest n")->capture_default_str();
    add_output_options(brute, out_opts);
    add_cap_options(brute, cap_opts);

    std::size_t wt = 1, wm = 0;
    bool wbrute = false;
    auto* wreath = app.add_subcommand("wreath", "Number of conjugacy classes of Z_t wr S_m");
    wreath->add_option("-t", wt, "Cyclic factor order t")->required();
    wreath->add_option("-m", wm, "Symmetric degree m")->required();
    wreath->add_flag("--brute", wbrute, "Also count classes by orbit enumeration");
    add_cap_options(wreath, cap_opts);

    std::vector<std::string> overrides;
    std::size_t suite_t_max = 8;
    auto* verify = app.add_subcommand("verify", "Cross-check all pipelines and the small-group suites");
    verify->add_option("-N,--order", order, "Truncation order")->capture_default_str();
    verify->add_option("-K,--brute-max", brute_max, "Largest n for brute force")->capture_default_str();
    verify->add_option("--suite-t-max", suite_t_max, "Largest t in the wreath-group suites")->capture_default_str();
    verify->add_option("--sigma-override", overrides, "Replace sigma(J) by VALUE in the product (J=VALUE)");
    add_cap_options(verify, cap_opts);

    std::size_t log_order = 40;
    auto* log_check = app.add_subcommand("log-check", "Formal log of the product vs the divisor formula");
    log_check->add_option("-N,--order", log_order, "Truncation order")->capture_default_str();

    std::int64_t d_max = 1000;
    auto* bound = app.add_subcommand("bound-check", "Check sum_{a|d} a*sigma(a) < d^4");
    bound->add_option("--d-max", d_max, "Largest d")->capture_default_str();

    std::size_t growth_order = 60;
    auto* growth = app.add_subcommand("growth", "Coefficients with nth-root growth estimates");
    growth->add_option("-N,--order", growth_order, "Truncation order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadArgs;
    }

    try {
        if (*expand) return emit_sequence(out_opts, coeffs_product(order).coeffs(), "product", order);
        if (*classes) return emit_sequence(out_opts, coeffs_classes(order).coeffs(), "classes", order);
        if (*brute) return emit_sequence(out_opts, coeffs_brute(brute_max, cap_opts.caps()), "brute", brute_max);
        if (*wreath) return run_wreath(wt, wm, wbrute, cap_opts);
        if (*verify) return run_verify(order, brute_max, cap_opts, overrides, suite_t_max);
        if (*log_check) return run_log_check(log_order);
        if (*bound) return run_bound_check(d_max);
        if (*growth) return run_growth(growth_order);
    } catch (const ResourceLimitError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kCapRefused;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kDisagreement;
    }
    return kBadArgs;
}
