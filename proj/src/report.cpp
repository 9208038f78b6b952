#include "lcsm/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace lcsm {

namespace {

using nlohmann::json;

json real(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json moment_json(const MomentEstimate& e)
{
    return {{"n", e.n},
            {"r", e.r},
            {"mean_lc", real(e.mean_lc)},
            {"m_r_hat", real(e.m_r_hat)},
            {"se", real(e.se)},
            {"ci99_lo", real(e.ci99.lo)},
            {"ci99_hi", real(e.ci99.hi)},
            {"gamma_hat", real(e.gamma_hat)}};
}

void moment_row(std::ostringstream& os, const MomentEstimate& e)
{
    os << e.n << ',' << format_real(e.r) << ',' << format_real(e.mean_lc) << ','
       << format_real(e.m_r_hat) << ',' << format_real(e.se) << ',' << format_real(e.ci99.lo) << ','
       << format_real(e.ci99.hi) << ',' << format_real(e.gamma_hat) << '\n';
}

constexpr const char* kMomentHeader = "n,r,mean_lc,m_r_hat,se,ci99_lo,ci99_hi,gamma_hat\n";

}  // namespace

std::string format_real(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string membership_name(Membership m)
{
    switch (m) {
    case Membership::Member:
        return "member";
    case Membership::NotMember:
        return "not_member";
    case Membership::Unknown:
        return "unknown";
    }
    return "unknown";
}

std::string decomposition_json(const CellDecomposition& d)
{
    json j = {{"v", d.v.v},
              {"pi", d.pi},
              {"nu", d.nu},
              {"S", d.aligned_dominant},
              {"r", d.trailing},
              {"lambda", lambda_c(d)}};
    return j.dump() + "\n";
}

std::string moments_csv(std::span<const MomentEstimate> rows)
{
    std::ostringstream os;
    os << kMomentHeader;
    for (const auto& e : rows) {
        moment_row(os, e);
    }
    return os.str();
}

std::string moments_json(std::span<const MomentEstimate> rows)
{
    json j = json::array();
    for (const auto& e : rows) {
        j.push_back(moment_json(e));
    }
    return dump(j);
}

std::string scaling_csv(std::span<const ScalingFit> fits)
{
    std::ostringstream os;
    for (const auto& f : fits) {
        os << kMomentHeader;
        for (const auto& p : f.points) {
            moment_row(os, p);
        }
        os << "slope,slope_ci_lo,slope_ci_hi\n"
           << format_real(f.slope) << ',' << format_real(f.slope_ci.lo) << ','
           << format_real(f.slope_ci.hi) << '\n';
    }
    return os.str();
}

std::string scaling_json(std::span<const ScalingFit> fits)
{
    json j = json::array();
    for (const auto& f : fits) {
        json points = json::array();
        for (const auto& p : f.points) {
            points.push_back(moment_json(p));
        }
        json residuals = json::array();
        for (double r : f.residuals) {
            residuals.push_back(real(r));
        }
        j.push_back({{"r", f.r},
                     {"points", points},
                     {"slope", real(f.slope)},
                     {"slope_ci_lo", real(f.slope_ci.lo)},
                     {"slope_ci_hi", real(f.slope_ci.hi)},
                     {"intercept", real(f.intercept)},
                     {"r_squared", real(f.r_squared)},
                     {"residuals", residuals}});
    }
    return dump(j);
}

std::string swap_csv(std::span<const SwapResult> rows)
{
    std::ostringstream os;
    os << "n,p_plus,p_plus_ci_lo,p_plus_ci_hi,p_minus,p_minus_ci_lo,p_minus_ci_hi,diff,diff_ci_lo,"
          "diff_ci_hi,replicates\n";
    bool strata = false;
    for (const auto& r : rows) {
        os << r.n << ',' << format_real(r.p_plus.estimate) << ',' << format_real(r.p_plus.ci.lo) << ','
           << format_real(r.p_plus.ci.hi) << ',' << format_real(r.p_minus.estimate) << ','
           << format_real(r.p_minus.ci.lo) << ',' << format_real(r.p_minus.ci.hi) << ','
           << format_real(r.diff.estimate) << ',' << format_real(r.diff.ci.lo) << ','
           << format_real(r.diff.ci.hi) << ',' << r.replicates << '\n';
        strata = strata || !r.strata.empty();
    }
    if (strata) {
        os << "n,stratum,count,plus,minus\n";
        for (const auto& r : rows) {
            for (const auto& s : r.strata) {
                os << r.n << ',' << membership_name(s.membership) << ',' << s.count << ',' << s.plus
                   << ',' << s.minus << '\n';
            }
        }
    }
    return os.str();
}

std::string swap_json(std::span<const SwapResult> rows)
{
    json j = json::array();
    for (const auto& r : rows) {
        json o = {{"n", r.n},
                  {"replicates", r.replicates},
                  {"plus", r.plus},
                  {"zero", r.zero},
                  {"minus", r.minus},
                  {"violations", r.violations},
                  {"p_plus", real(r.p_plus.estimate)},
                  {"p_plus_ci_lo", real(r.p_plus.ci.lo)},
                  {"p_plus_ci_hi", real(r.p_plus.ci.hi)},
                  {"p_minus", real(r.p_minus.estimate)},
                  {"p_minus_ci_lo", real(r.p_minus.ci.lo)},
                  {"p_minus_ci_hi", real(r.p_minus.ci.hi)},
                  {"diff", real(r.diff.estimate)},
                  {"diff_ci_lo", real(r.diff.ci.lo)},
                  {"diff_ci_hi", real(r.diff.ci.hi)}};
        if (!r.strata.empty()) {
            json strata = json::array();
            for (const auto& s : r.strata) {
                strata.push_back({{"stratum", membership_name(s.membership)},
                                  {"count", s.count},
                                  {"plus", s.plus},
                                  {"minus", s.minus}});
            }
            o["conditional_on_Bn"] = strata;
        }
        j.push_back(o);
    }
    return dump(j);
}

std::string chain_law_csv(std::span<const ChainLawResult> rows)
{
    std::ostringstream os;
    os << "n,k,tv\n";
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.tv.size(); ++k) {
            os << r.n << ',' << k << ',' << format_real(r.tv[k]) << '\n';
        }
    }
    os << "n,m,max_tv,mixture_tv\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.m << ',' << format_real(r.max_tv) << ',' << format_real(r.mixture_tv) << '\n';
    }
    return os.str();
}

std::string chain_law_json(std::span<const ChainLawResult> rows)
{
    json j = json::array();
    for (const auto& r : rows) {
        json tv = json::array();
        for (double t : r.tv) {
            tv.push_back(real(t));
        }
        j.push_back({{"n", r.n}, {"m", r.m}, {"tv", tv}, {"max_tv", real(r.max_tv)},
                     {"mixture_tv", real(r.mixture_tv)}});
    }
    return dump(j);
}

std::string bounds_csv(std::span<const BoundReport> rows)
{
    std::ostringstream os;
    os << "name,value,vacuous,inputs\n";
    for (const auto& b : rows) {
        os << b.name << ',' << format_real(b.value) << ',' << (b.vacuous ? "true" : "false") << ',';
        for (std::size_t i = 0; i < b.inputs.size(); ++i) {
            os << (i ? ";" : "") << b.inputs[i].first << '=' << format_real(b.inputs[i].second);
        }
        os << '\n';
    }
    return os.str();
}

std::string bounds_json(std::span<const BoundReport> rows)
{
    json j = json::array();
    for (const auto& b : rows) {
        json inputs = json::object();
        for (const auto& [k, v] : b.inputs) {
            inputs[k] = real(v);
        }
        j.push_back({{"name", b.name}, {"inputs", inputs}, {"value", real(b.value)}, {"vacuous", b.vacuous}});
    }
    return dump(j);
}

std::string oracle_csv(const OracleReport& report)
{
    std::ostringstream os;
    os << "check,passed,cases,detail\n";
    for (const auto& c : report.checks) {
        os << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.cases << ',' << c.detail << '\n';
    }
    return os.str();
}

std::string oracle_json(const OracleReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"check", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    }
    return dump({{"passed", report.passed()}, {"checks", checks}});
}

std::string distribution_csv(std::span<const std::size_t> ns,
                             std::span<const std::vector<double>> samples)
{
    std::ostringstream os;
    os << "n,replicate,lc,scaled\n";
    for (std::size_t b = 0; b < ns.size() && b < samples.size(); ++b) {
        const auto& s = samples[b];
        const double mu = s.empty() ? 0.0 : mean(s);
        const double root = std::sqrt(static_cast<double>(ns[b]));
        for (std::size_t i = 0; i < s.size(); ++i) {
            os << ns[b] << ',' << i << ',' << format_real(s[i]) << ',' << format_real((s[i] - mu) / root)
               << '\n';
        }
    }
    return os.str();
}

}  // namespace lcsm
