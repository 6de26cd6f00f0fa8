#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kovacic/case1.hpp"
#include "kovacic/case2.hpp"
#include "kovacic/case3.hpp"
#include "kovacic/closedform.hpp"
#include "kovacic/normalize.hpp"
#include "kovacic/numeric.hpp"

namespace kovacic {

struct SolverConfig {
    std::optional<int> forced_case;
    std::optional<int> forced_n;
    int max_d = 64;
    bool verify = true;
    long trial_budget = 10000;
};

enum class Status { Solved, NoLiouvillian, Unsupported, BudgetExceeded, Error };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::Solved: return "solved";
    case Status::NoLiouvillian: return "no_liouvillian";
    case Status::Unsupported: return "unsupported";
    case Status::BudgetExceeded: return "budget_exceeded";
    case Status::Error: return "error";
    }
    return "error";
}

struct Analysis {
    NormalForm normal;
    PoleAnalysis poles;
    CaseConditions cases;
};

struct SolveReport {
    OdeInput ode;
    std::optional<Analysis> analysis;
    Status status = Status::Error;
    int case_used = -1;
    int n_case3 = -1;
    int d = -1;
    std::optional<SurdFunction> omega;
    std::optional<Polynomial> p;
    std::optional<ClosedForm> z;
    std::optional<ClosedForm> y1;
    SecondSolution y2;
    std::optional<MinPolyResult> min_poly;
    bool verified = false;
    long trials = 0;
    std::string failure_reason;

    bool solved() const { return status == Status::Solved; }
};

inline Analysis analyze(const OdeInput& ode) {
    Analysis out;
    out.normal = to_normal_form(ode);
    out.poles = pole_analysis(out.normal.r);
    out.cases = necessary_cases(out.poles);
    return out;
}

namespace detail {

struct Search {
    const OdeInput& ode;
    const Analysis& an;
    const SolverConfig& cfg;
    SolveReport& report;
    bool skipped_for_degree = false;
    bool out_of_budget = false;

    /// False once the trial budget is spent.
    bool take_trial() {
        if (report.trials >= cfg.trial_budget) {
            out_of_budget = true;
            return false;
        }
        ++report.trials;
        return true;
    }

    bool degree_ok(int d) {
        if (d <= cfg.max_d) return true;
        skipped_for_degree = true;
        return false;
    }

    /// Builds y1, y2 and runs the checks; false when verification fails.
    bool accept(int case_id, int n, int d, const SurdFunction& omega, const Polynomial& p) {
        const RationalFunction& r = an.normal.r;
        SurdFunction w = omega + RationalFunction(p.derivative(), p);
        if (cfg.verify && !riccati_verify(w, r)) return false;
        ClosedForm z = exp_of_integral(omega, p);
        ClosedForm y1 = recover_y1(z, an.normal.a);
        bool ok = true;
        if (cfg.verify) {
            ok = ode_log_derivative_verify(y1.log_derivative(), ode.A, ode.B, ode.C);
            if (ok && y1.is_explicit()) ok = numeric::numeric_check(ode, y1);
            if (!ok) return false;
        }
        report.case_used = case_id;
        report.n_case3 = n;
        report.d = d;
        report.omega = omega;
        report.p = p;
        report.z = z;
        report.y1 = y1;
        report.y2 = second_solution(y1, an.normal.a);
        report.verified = cfg.verify;
        report.status = Status::Solved;
        return true;
    }

    bool run_case1() {
        const RationalFunction& r = an.normal.r;
        std::vector<PoleDataCase1> pd;
        for (const auto& pole : an.poles.poles) pd.push_back(pole_data_case1(r, pole));
        InfinityDataCase1 inf = infinity_data_case1(r, *an.poles.order_at_infinity);
        for (const auto& fam : d_candidates_case1(pd, inf)) {
            if (!degree_ok(fam.d)) continue;
            if (!take_trial()) return false;
            RationalFunction omega = build_omega_case1(fam, pd, inf);
            auto p = solve_p_case1(omega, r, fam.d);
            if (p && accept(1, -1, fam.d, omega, *p)) return true;
        }
        return false;
    }

    bool run_case2() {
        const RationalFunction& r = an.normal.r;
        std::vector<ESet> sets;
        for (const auto& pole : an.poles.poles) sets.push_back(e_set_case2(r, pole));
        ESet inf = e_set_infinity_case2(r, *an.poles.order_at_infinity);
        for (const auto& f : d_theta_case2(sets, inf, an.poles.poles)) {
            if (!degree_ok(f.family.d)) continue;
            if (!take_trial()) return false;
            auto p = solve_p_case2(f.theta, r, f.family.d);
            if (!p) continue;
            for (const auto& omega : omega_case2(f.theta, *p, r)) {
                if (accept(2, -1, f.family.d, omega, 1)) {
                    report.p = *p; // already folded into omega
                    return true;
                }
            }
        }
        return false;
    }

    bool run_case3(int n) {
        const RationalFunction& r = an.normal.r;
        std::vector<ESet> sets;
        for (const auto& pole : an.poles.poles) sets.push_back(e_set_case3(r, pole, n));
        ESet inf = e_set_infinity_case3(r, n);
        for (const auto& ctx : d_theta_S_case3(sets, inf, n, an.poles.poles)) {
            if (!degree_ok(ctx.d)) continue;
            if (!take_trial()) return false;
            auto p = solve_coeffs_case3(ctx, r);
            if (!p) continue;
            MinPolyResult mp = omega_min_poly(p_sequence(*p, ctx, r), ctx);
            if (mp.rational_root) {
                if (accept(3, n, ctx.d, *mp.rational_root, 1)) {
                    report.p = *p;
                    return true;
                }
                continue;
            }
            // A Liouvillian solution exists but omega is algebraic of degree n.
            report.case_used = 3;
            report.n_case3 = n;
            report.d = ctx.d;
            report.p = *p;
            report.min_poly = mp;
            report.status = Status::Unsupported;
            report.failure_reason = "omega is an algebraic function with minimal polynomial " + mp.to_string();
            return true;
        }
        return false;
    }
};

} // namespace detail

inline SolveReport solve(const OdeInput& ode, const SolverConfig& cfg = {}) {
    SolveReport report;
    report.ode = ode;
    if (cfg.forced_n && cfg.forced_case.value_or(3) != 3) {
        report.status = Status::Error;
        report.failure_reason = "n can only be forced together with case 3";
        return report;
    }
    if (cfg.max_d <= 0 || cfg.trial_budget <= 0) {
        report.status = Status::Error;
        report.failure_reason = "caps must be positive";
        return report;
    }
    try {
        report.analysis = analyze(ode);
    } catch (const UnsupportedPoles& e) {
        report.status = Status::Unsupported;
        report.failure_reason = e.what();
        return report;
    } catch (const SymbolicCoefficients& e) {
        report.status = Status::Unsupported;
        report.failure_reason = e.what();
        return report;
    }
    const Analysis& an = *report.analysis;
    try {
        if (an.normal.r.is_zero()) {
            // z'' = 0
            if (!cfg.forced_case || *cfg.forced_case == 1) {
                detail::Search s{ode, an, cfg, report};
                if (s.accept(1, -1, 0, RationalFunction(), 1)) return report;
            }
            report.status = Status::NoLiouvillian;
            report.failure_reason = "r = 0 is only handled by case 1";
            return report;
        }
        detail::Search s{ode, an, cfg, report};
        std::vector<int> cases;
        for (int k : an.cases.possible)
            if (!cfg.forced_case || *cfg.forced_case == k) cases.push_back(k);
        std::vector<int> ns = cfg.forced_n ? std::vector<int>{*cfg.forced_n} : std::vector<int>{4, 6, 12};
        for (int k : cases) {
            bool done = false;
            if (k == 1) done = s.run_case1();
            else if (k == 2) done = s.run_case2();
            else
                for (int n : ns)
                    if ((done = s.run_case3(n)) || s.out_of_budget) break;
            if (done) return report;
            if (s.out_of_budget) break;
        }
        if (s.out_of_budget) {
            report.status = Status::BudgetExceeded;
            report.failure_reason = "trial budget of " + std::to_string(cfg.trial_budget) + " exhausted";
        } else if (s.skipped_for_degree) {
            report.status = Status::BudgetExceeded;
            report.failure_reason = "families with d above " + std::to_string(cfg.max_d) + " were skipped";
        } else {
            report.status = Status::NoLiouvillian;
            if (cases.empty())
                report.failure_reason = cfg.forced_case ? "case " + std::to_string(*cfg.forced_case) + " fails the necessary conditions"
                                                        : "no case satisfies the necessary conditions";
            else
                report.failure_reason = "every candidate failed";
        }
    } catch (const UnsupportedPoles& e) {
        report.status = Status::Unsupported;
        report.failure_reason = e.what();
    } catch (const Error& e) {
        report.status = Status::Error;
        report.failure_reason = e.what();
    }
    return report;
}

} // namespace kovacic
