#include "residua/reference_checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "residua/cones.hpp"
#include "residua/normal_form.hpp"
#include "residua/parse.hpp"
#include "residua/residue_engine.hpp"
#include "residua/root_analysis.hpp"
#include "residua/system_file.hpp"

namespace residua {

std::string reference_system_text() {
    return "vars: x1 x2 x3\n"
           "weight: 3 4 7\n"
           "g: x1^5 + x2^3 + x3^2 - 1\n"
           "g: x1^2 + x2^2 + x3 - 1\n"
           "g: x1^6 + x2^5 + x3^3 - 1\n";
}

namespace {

std::ostream& operator<<(std::ostream& os, const ExponentVec& e) {
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    return os << ")";
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

struct Recorder {
    std::vector<ReferenceCheck> checks;

    void expect(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back(ReferenceCheck{name, ok, ok ? "" : detail});
    }

    template <class T>
    void expect_eq(const std::string& name, const T& got, const T& want) {
        std::ostringstream os;
        if (!(got == want)) os << "expected " << want << ", got " << got;
        checks.push_back(ReferenceCheck{name, got == want, os.str()});
    }
};

const char* kJacobianNormalForm =
    "30*x1^4*x2*x3^2 - 25*x1^4*x3^2 + 16*x1^4 - 152*x1^4*x2 + 146*x1^4*x3 - 251*x1^3*x2*x3"
    " + 83*x1^3*x3^2 - 73*x1^3 + 229*x1^3*x2 + 8*x1^3*x3 - 196*x1^2*x2*x3 + 226*x1^2*x3^2"
    " - 260*x1^2 + 240*x1^2*x2 + 34*x1^2*x3 - 114*x1*x2*x3^2 + 254*x1*x2*x3 - 140*x1*x2"
    " - 62*x1*x3^2 - 78*x1*x3 + 140*x1 + 69*x2*x3^2 + 108*x2*x3 - 177*x2 - 49*x3^2 - 128*x3"
    " + 177";

const char* kB2 =
    "x1^-10*x2^-4 - x1^-3*x2^-4*x3^-3 + x2*x1^-5*x3^-5 + x2^3*x1^-10*x3^-4 + x3*x1^-15*x2^-2"
    " + x2^8*x1^-5*x3^-9 + x1^-5*x2^-6*x3^-1";

std::vector<IntVec> int_vectors(std::vector<std::vector<long>> raw) {
    std::vector<IntVec> out;
    for (auto& v : raw) {
        IntVec iv;
        for (long x : v) iv.push_back(Integer(x));
        out.push_back(std::move(iv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string show_rays(const std::vector<IntVec>& rays) {
    std::ostringstream os;
    for (const auto& r : rays) {
        os << "(";
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
        os << ") ";
    }
    return os.str();
}

} // namespace

std::vector<ReferenceCheck> run_reference_checks(Exec exec) {
    Recorder rec;
    SystemFile file = parse_system_text(reference_system_text());
    BasisProfile profile = verify_basis(file.system, *file.weight);
    NormalFormEngine nf(profile);
    ResidueEngine series_engine(profile, exec);
    const VarSetPtr& vars = file.system.vars;

    // 1. basis data
    rec.expect_eq("basis r", profile.r, ExponentVec{4, 1, 2});
    rec.expect_eq("basis degrees d_w", profile.weighted_sum, 44LL);
    rec.expect_eq("quotient dimension", profile.quotient_dimension(), Integer(30));
    rec.expect_eq("tr(1) = dim V", nf.trace(Polynomial::constant(vars, Rational(1))), Rational(30));

    // 2. series coefficients and term counts
    auto series = series_engine.shared_series(40);
    rec.expect_eq("B_2", series->b_coeffs[2], parse_polynomial(kB2, vars));
    const std::map<long long, std::size_t> counts{{2, 7},     {5, 41},    {10, 216},
                                                  {15, 569},  {20, 1102}, {25, 1803},
                                                  {30, 2682}, {35, 3744}, {40, 4964}};
    for (const auto& [j, want] : counts) {
        rec.expect_eq("B_" + std::to_string(j) + " term count",
                      series->b_coeffs[static_cast<std::size_t>(j)].term_count(), want);
    }

    // 3. residues by both algorithms
    const Rational big_residue = rational_from_string("-258756707658424020014953731203");
    ExponentVec a15{15, 15, 15};
    rec.expect_eq("Res(x^(15,15,15)) via series", series_engine.residue_monomial(a15), big_residue);
    rec.expect_eq("Res(x^(15,15,15)) via normal form",
                  nf.residue(Polynomial::monomial(vars, a15, Rational(1))), big_residue);
    ConePair cones = build_cones(profile);
    ExponentVec a611{6, 1, 1};
    rec.expect("Res(x1^6 x2 x3) vanishes by cone test", vanishing_by_cone(cones, a611, profile.r));
    rec.expect_eq("Res(x1^6 x2 x3) via series", series_engine.residue_monomial(a611), Rational(0));
    rec.expect_eq("Res(x1^6 x2 x3) via normal form",
                  nf.residue(Polynomial::monomial(vars, a611, Rational(1))), Rational(0));
    rec.expect_eq("Res(x^r)", series_engine.residue_monomial(profile.r), Rational(1));

    // 4. normal form of the Jacobian
    Polynomial nfj = nf.normal_form(jacobian_determinant(profile.system));
    rec.expect_eq("NF(J)", nfj, parse_polynomial(kJacobianNormalForm, vars));

    // 5. traces and the trace form
    rec.expect_eq("tr(x1^8 x2^2 x3^4)",
                  nf.trace(Polynomial::monomial(vars, ExponentVec{8, 2, 4}, Rational(1))),
                  Rational(Integer("16049138278")));
    TraceForm tf = trace_form(nf, exec);
    RankSignature t_rs = rank_and_signature(tf.matrix);
    rec.expect_eq("rank(T)", t_rs.rank, std::size_t(20));
    rec.expect_eq("signature(T)", t_rs.signature, 6LL);
    CharPoly tp = char_poly(tf.matrix);
    std::vector<Rational> reflected = tp.coefficients;
    for (std::size_t i = 0; i < reflected.size(); ++i)
        if ((reflected.size() - 1 - i) % 2 == 1) reflected[i] = -reflected[i];
    rec.expect_eq("char poly of T: positive roots", sign_variations(tp.coefficients), std::size_t(13));
    rec.expect_eq("char poly of T: negative roots", sign_variations(reflected), std::size_t(7));

    // 6. dual matrix
    RationalMatrix m = nf.dual_matrix(exec);
    bool anti = true, unit = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i + j + 1 < m.rows() && sign_of(m(i, j)) != 0) anti = false;
        if (m(i, m.rows() - 1 - i) != 1) unit = false;
    }
    rec.expect("M anti-triangular", anti);
    rec.expect("M unit anti-diagonal", unit);
    Rational det = determinant(m);
    rec.expect("det(M) = +-1", det == 1 || det == -1, "got " + to_string(det));
    rec.expect_eq("signature(M)", rank_and_signature(m).signature, 0LL);
    rec.expect_eq("mapping degree", mapping_degree(nf), 0LL);

    // 7. Chow form through degree 3
    ChowForm chow = chow_form(nf, 3);
    const std::vector<std::pair<ExponentVec, Rational>> log_values{
        {{1, 0, 0}, Rational(0)},          {{0, 1, 0}, Rational(5)},
        {{0, 0, 1}, Rational(-5)},         {{2, 0, 0}, Rational(0)},
        {{1, 1, 0}, Rational(37)},         {{1, 0, 1}, Rational(-121)},
        {{0, 2, 0}, Rational(-35, 2)},     {{0, 1, 1}, Rational(106)},
        {{0, 0, 2}, Rational(-485, 2)},    {{3, 0, 0}, Rational(17)},
        {{2, 1, 0}, Rational(-74)},        {{2, 0, 1}, Rational(177)},
        {{1, 2, 0}, Rational(-172)},       {{1, 1, 1}, Rational(536)},
        {{1, 0, 2}, Rational(-686)},       {{0, 3, 0}, Rational(185, 3)},
        {{0, 2, 1}, Rational(-667)},       {{0, 1, 2}, Rational(1084)},
    };
    bool log_ok = true;
    std::string log_detail;
    for (const auto& [e, want] : log_values) {
        Rational got = chow.log_series.coefficient(e);
        if (got != want) {
            log_ok = false;
            log_detail += " coefficient mismatch";
        }
    }
    rec.expect("log Chow series coefficients", log_ok, log_detail);
    const std::vector<std::pair<ExponentVec, Rational>> chow_values{
        {{0, 0, 0}, Rational(1)},      {{1, 0, 0}, Rational(0)},
        {{0, 1, 0}, Rational(5)},      {{0, 0, 1}, Rational(-5)},
        {{2, 0, 0}, Rational(0)},      {{1, 1, 0}, Rational(37)},
        {{1, 0, 1}, Rational(-121)},   {{0, 2, 0}, Rational(-5)},
        {{0, 1, 1}, Rational(81)},     {{0, 0, 2}, Rational(-230)},
        {{3, 0, 0}, Rational(17)},     {{2, 1, 0}, Rational(-74)},
        {{2, 0, 1}, Rational(177)},    {{1, 2, 0}, Rational(13)},
        {{1, 1, 1}, Rational(-254)},   {{1, 0, 2}, Rational(-81)},
        {{0, 3, 0}, Rational(-5)},     {{0, 2, 1}, Rational(-112)},
        {{0, 1, 2}, Rational(-596)},
    };
    bool chow_ok = true;
    for (const auto& [e, want] : chow_values)
        if (chow.series.coefficient(e) != want) chow_ok = false;
    rec.expect("Chow form coefficients", chow_ok);

    // 8. cones
    auto want_w = int_vectors({{4, 5, 10}, {1, 1, 2}, {5, 6, 10}, {2, 3, 5}});
    auto want_wstar = int_vectors({{5, 0, -2}, {0, 2, -1}, {-2, 0, 1}, {0, -5, 3}});
    auto got_w = cones.w_rays;
    std::sort(got_w.begin(), got_w.end());
    auto got_wstar = cones.wstar_rays;
    std::sort(got_wstar.begin(), got_wstar.end());
    rec.expect("W rays", got_w == want_w, "got " + show_rays(got_w));
    rec.expect("W* rays", got_wstar == want_wstar, "got " + show_rays(got_wstar));

    return rec.checks;
}

} // namespace residua
