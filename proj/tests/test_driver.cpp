#include <chrono>

#include "support.hpp"

using namespace kovacic;
using namespace testing_support;

namespace {

SolveReport run(const std::string& ode, SolverConfig cfg = {}) { return solve(parse_ode(ode), cfg); }

SolverConfig forced(int k, std::optional<int> n = std::nullopt) {
    SolverConfig cfg;
    cfg.forced_case = k;
    cfg.forced_n = n;
    return cfg;
}

const char* const kEx1 = "(2*x+1)*y'' - 2*y' - (2*x+3)*y = 0";
const char* const kCubic = "(1-x)*x^2*y'' + (5*x-4)*x*y' + (6-9*x)*y = 0";

} // namespace

TEST(Solve, ConstantPoleDefaultFamily) {
    SolveReport rep = run(kEx1);
    ASSERT_EQ(rep.status, Status::Solved) << rep.failure_reason;
    EXPECT_TRUE(rep.verified);
    EXPECT_EQ(rep.case_used, 1);
    EXPECT_EQ(rep.d, 0);
    EXPECT_TRUE(same_up_to_constant(*rep.y1, rf("-1")));
    ASSERT_TRUE(rep.y2.closed.has_value()) << rep.y2.text;
    EXPECT_TRUE(same_up_to_constant(*rep.y2.closed, rf("1 + 1/x")));
}

TEST(Solve, ForcedCaseTwoFindsTheOtherSolution) {
    SolveReport rep = run(kEx1, forced(2));
    ASSERT_EQ(rep.status, Status::Solved) << rep.failure_reason;
    EXPECT_EQ(rep.case_used, 2);
    EXPECT_EQ(rep.d, 1);
    EXPECT_EQ(rep.y1->to_string(), "x*exp(x)");
}

TEST(Solve, ConstantCoefficientsComplexExponent) {
    SolveReport rep = run("y'' + y' + y = 0");
    ASSERT_TRUE(rep.solved());
    EXPECT_TRUE(rep.verified);
    ASSERT_TRUE(rep.omega->is_rational());
    EXPECT_TRUE(rep.omega->A == RationalFunction(Polynomial(SurdNumber::surd(Rational(-1, 2), -3))));
    EXPECT_EQ(rep.y1->to_string(), "exp((-1/2-1/2*sqrt(-3))*x)");
}

TEST(Solve, CubicUnderEveryForcedCase) {
    for (int k : {1, 2, 3}) {
        SolveReport rep = run(kCubic, forced(k));
        ASSERT_EQ(rep.status, Status::Solved) << k << ": " << rep.failure_reason;
        EXPECT_EQ(rep.case_used, k);
        ASSERT_TRUE(rep.y1->as_rational_function().has_value()) << rep.y1->to_string();
        EXPECT_TRUE(same_up_to_constant(*rep.y1, rf("3/x"))) << k;
        if (k == 3) EXPECT_EQ(rep.n_case3, 4);
    }
}

TEST(Solve, CaseThreeReportsItsPolynomial) {
    SolveReport rep = run("(1-x^2)*y'' - 2*x*y' + 6*y = 0", forced(3));
    ASSERT_TRUE(rep.solved()) << rep.failure_reason;
    EXPECT_EQ(rep.n_case3, 4);
    ASSERT_TRUE(rep.p.has_value());
    EXPECT_EQ(rep.p->degree(), rep.d);
    EXPECT_TRUE(same_up_to_constant(*rep.y1, rf("6*x/(3*x^2-1)")));
    EXPECT_EQ(rep.y2.text, "(1/3*(3*x^2-1))*(27*x/(12*x^2-4)-9/8*ln(x+1)+9/8*ln(x-1))");
}

TEST(Solve, AlgebraicOmegaIsUnsupported) {
    SolveReport rep = run("(1-x^2)*y'' - x*y' + 4*y = 0", forced(3));
    EXPECT_EQ(rep.status, Status::Unsupported);
    EXPECT_EQ(rep.case_used, 3);
    ASSERT_TRUE(rep.min_poly.has_value());
    EXPECT_FALSE(rep.min_poly->rational_root.has_value());
    EXPECT_NE(rep.failure_reason.find("minimal polynomial"), std::string::npos);
}

TEST(Solve, InverseSixthPowerIsNotLiouvillian) {
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep = run("y'' - 1/x^6*y = 0");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_EQ(rep.status, Status::NoLiouvillian);
    EXPECT_EQ(rep.analysis->cases.possible, (std::vector<int>{1}));
    EXPECT_EQ(rep.trials, 0);
    EXPECT_LT(secs, 1.0);
}

TEST(Solve, NoAdmissibleCase) {
    SolveReport rep = run("y'' - x*y = 0");
    EXPECT_EQ(rep.status, Status::NoLiouvillian);
    EXPECT_EQ(rep.failure_reason, "no case satisfies the necessary conditions");
}

TEST(Solve, ForcedCaseIsIntersectedWithAdmissible) {
    SolveReport rep = run("4*x*y'' + 2*y' + y = 0", forced(1));
    EXPECT_EQ(rep.status, Status::NoLiouvillian);
    EXPECT_EQ(rep.failure_reason, "case 1 fails the necessary conditions");
    SolveReport rep3 = run("y'' + x*y' + y = 0", forced(3, 12));
    EXPECT_EQ(rep3.status, Status::NoLiouvillian);
}

TEST(Solve, IrrationalPolesAreUnsupported) {
    SolveReport rep = run("y'' + 1/(x^2+1)*y = 0");
    EXPECT_EQ(rep.status, Status::Unsupported);
    EXPECT_NE(rep.failure_reason.find("x^2+1"), std::string::npos);
}

TEST(Solve, ZeroNormalForm) {
    SolveReport rep = run("y'' = 0");
    ASSERT_TRUE(rep.solved());
    EXPECT_EQ(rep.case_used, 1);
    EXPECT_EQ(rep.y1->to_string(), "1");
    EXPECT_EQ(run("y'' = 0", forced(2)).status, Status::NoLiouvillian);
}

TEST(Solve, BudgetExceededByTrials) {
    SolverConfig cfg = forced(3);
    cfg.trial_budget = 1;
    SolveReport rep = run("(1-x^2)*y'' - 2*x*y' + 6*y = 0", cfg);
    EXPECT_EQ(rep.status, Status::BudgetExceeded);
    EXPECT_EQ(rep.trials, 1);
    EXPECT_EQ(rep.failure_reason, "trial budget of 1 exhausted");
}

TEST(Solve, BudgetExceededByDegreeCap) {
    SolverConfig cfg;
    cfg.max_d = 3;
    SolveReport rep = run("y'' - 2*x*y' + 8*y = 0", cfg);
    EXPECT_EQ(rep.status, Status::BudgetExceeded);
    cfg.max_d = 4;
    SolveReport ok = run("y'' - 2*x*y' + 8*y = 0", cfg);
    ASSERT_TRUE(ok.solved());
    EXPECT_EQ(ok.d, 4);
    EXPECT_EQ(ok.y1->to_string(), "1/4*(4*x^4-12*x^2+3)");
}

TEST(Solve, ConfigurationErrors) {
    SolverConfig bad = forced(1, 4);
    EXPECT_EQ(run(kEx1, bad).status, Status::Error);
    SolverConfig zero;
    zero.max_d = 0;
    EXPECT_EQ(run(kEx1, zero).status, Status::Error);
    zero.max_d = 5;
    zero.trial_budget = 0;
    EXPECT_EQ(run(kEx1, zero).status, Status::Error);
}

TEST(Solve, VerificationCanBeSkipped) {
    SolverConfig cfg;
    cfg.verify = false;
    SolveReport rep = run(kEx1, cfg);
    EXPECT_TRUE(rep.solved());
    EXPECT_FALSE(rep.verified);
}

TEST(Solve, Deterministic) {
    for (const char* ode : {kEx1, kCubic, "x^2*y'' + x*y' + (x^2 - 9/4)*y = 0"}) {
        std::string a = report_json(run(ode)).dump();
        std::string b = report_json(run(ode)).dump();
        EXPECT_EQ(a, b);
    }
}

TEST(Solve, SymbolicCoefficientsRejectedAtParse) {
    EXPECT_THROW(parse_ode("y'' + n*y = 0"), SymbolicCoefficients);
    EXPECT_THROW(parse_ode("y'' + sin(x)*y = 0"), SymbolicCoefficients);
}
