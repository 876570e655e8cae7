#include "fano/projective.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace {
void require(bool ok, const char* msg) {
    if (!ok) throw std::runtime_error(msg);
}
} // namespace

PPoint::PPoint(FieldPtr field, std::vector<Elem> coords) : k(std::move(field)), c(std::move(coords)) {
    bool nonzero = false;
    for (const Elem& x : c) nonzero = nonzero || !x.is_zero();
    require(nonzero, "PPoint: all coordinates zero");
}

PPoint PPoint::convert(const FieldPtr& target) const {
    std::vector<Elem> out;
    out.reserve(c.size());
    for (const Elem& x : c) out.push_back(convert_elem(x, target));
    return PPoint(target, std::move(out));
}

std::string PPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? ":" : "") << c[i].str();
    os << ")";
    return os.str();
}

bool points_equal(const PPoint& p, const PPoint& q) {
    require(p.dim() == q.dim(), "points_equal: dimension mismatch");
    return vectors_proportional(p.c, q.c);
}

Variety::Variety(int ambient, std::vector<MPoly> generators) : n(ambient), gens(std::move(generators)) {
    require(!gens.empty(), "Variety: no generators");
    for (const MPoly& g : gens) {
        require(g.nvars() == n + 1, "Variety: generator variable count mismatch");
        int d = g.total_degree();
        require(d >= 0 && g.homogeneous(d), "Variety: generator not homogeneous");
        degs.push_back(d);
    }
}

Variety Variety::convert(const FieldPtr& target) const {
    std::vector<MPoly> out;
    out.reserve(gens.size());
    for (const MPoly& g : gens) out.push_back(g.convert(target));
    return Variety(n, std::move(out));
}

CurveMap::CurveMap(std::vector<BinaryForm> fs) {
    require(!fs.empty(), "CurveMap: no forms");
    n = static_cast<int>(fs.size()) - 1;
    d = fs.front().degree();
    bool nonzero = false;
    for (const BinaryForm& f : fs) {
        require(f.degree() == d, "CurveMap: mixed degrees");
        nonzero = nonzero || !f.is_zero();
    }
    require(nonzero, "CurveMap: all forms zero");
    // strip a common factor so degenerate specializations are visible
    BinaryForm g;
    for (const BinaryForm& f : fs) {
        if (f.is_zero()) continue;
        g = g.valid() ? bf_gcd(g, f) : f;
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0) {
        stripped_degree = g.degree();
        std::vector<BinaryForm> reduced;
        for (const BinaryForm& f : fs) {
            if (f.is_zero()) {
                reduced.emplace_back(f.field(), d - g.degree());
                continue;
            }
            // exact division of the dehomogenizations at s = 1; declared
            // degrees carry the s-powers
            const FieldPtr& k = f.field();
            up::Poly num(f.coeffs().begin(), f.coeffs().end());
            up::Poly den(g.coeffs().begin(), g.coeffs().end());
            auto [q, r] = up::divmod(k, up::trim(num), up::trim(den));
            require(up::is_zero(r), "CurveMap: gcd fails to divide a form");
            BinaryForm c(k, d - g.degree());
            for (int i = 0; i <= up::deg(q); ++i) c.coeff(i) = q[static_cast<size_t>(i)];
            reduced.push_back(std::move(c));
        }
        forms = std::move(reduced);
        d -= g.degree();
    } else {
        forms = std::move(fs);
    }
}

std::vector<Elem> CurveMap::eval(const Elem& s, const Elem& t) const {
    std::vector<Elem> out;
    out.reserve(forms.size());
    for (const BinaryForm& f : forms) out.push_back(f.eval(s, t));
    return out;
}

CurveMap CurveMap::convert(const FieldPtr& target) const {
    std::vector<BinaryForm> out;
    out.reserve(forms.size());
    for (const BinaryForm& f : forms) out.push_back(f.convert(target));
    return CurveMap(std::move(out));
}

std::string CurveMap::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < forms.size(); ++i) os << (i ? " : " : "") << forms[i].str();
    os << ")";
    return os.str();
}

ProjAction::ProjAction(Mat matrix) : m(std::move(matrix)) {
    require(m.rows == m.cols, "ProjAction: matrix not square");
    require(!mat_det(m).is_zero(), "ProjAction: singular matrix");
}

bool actions_equal(const ProjAction& a, const ProjAction& b) { return mats_proportional(a.m, b.m); }

bool point_on_variety(const PPoint& p, const Variety& v) {
    require(p.dim() == v.n, "point_on_variety: dimension mismatch");
    for (const MPoly& g : v.gens)
        if (!g.eval(p.c).is_zero()) return false;
    return true;
}

bool curve_on_variety(const CurveMap& c, const Variety& v) {
    require(c.n == v.n, "curve_on_variety: dimension mismatch");
    for (size_t i = 0; i < v.gens.size(); ++i)
        if (!v.gens[i].eval_forms(c.forms, v.degs[i] * c.d).is_zero()) return false;
    return true;
}

int rnc_rank(const CurveMap& c) {
    const FieldPtr& k = c.field();
    Mat m(k, c.n + 1, c.d + 1);
    for (int i = 0; i <= c.n; ++i)
        for (int j = 0; j <= c.d; ++j) m.at(i, j) = c.forms[static_cast<size_t>(i)].coeff(j);
    return kernel_and_rank(m).rank;
}

bool is_smooth_rnc(const CurveMap& c) { return rnc_rank(c) == c.d + 1; }

PPoint act_point(const ProjAction& a, const PPoint& p) {
    require(a.m.rows == p.dim() + 1, "act_point: size mismatch");
    return PPoint(p.k, a.m.apply(p.c));
}

CurveMap act_curve(const ProjAction& a, const CurveMap& c) {
    require(a.m.rows == c.n + 1, "act_curve: size mismatch");
    const FieldPtr& k = c.field();
    std::vector<BinaryForm> out;
    for (int i = 0; i <= c.n; ++i) {
        BinaryForm f(k, c.d);
        for (int j = 0; j <= c.n; ++j) f = f + c.forms[static_cast<size_t>(j)].scale(a.m.at(i, j));
        out.push_back(std::move(f));
    }
    return CurveMap(std::move(out));
}

namespace {

// coefficient vectors of a list of equal-degree forms in a shared monomial basis
Mat span_matrix(const FieldPtr& k, const std::vector<MPoly>& polys, std::map<MPoly::Exps, int>& index) {
    for (const MPoly& p : polys)
        for (const auto& [e, c] : p.terms())
            if (!index.count(e)) {
                int next = static_cast<int>(index.size());
                index[e] = next;
            }
    Mat m(k, static_cast<int>(polys.size()), static_cast<int>(index.size()));
    for (size_t i = 0; i < polys.size(); ++i)
        for (const auto& [e, c] : polys[i].terms()) m.at(static_cast<int>(i), index[e]) = c;
    return m;
}

} // namespace

bool action_preserves_variety(const ProjAction& a, const Variety& v) {
    require(a.m.rows == v.n + 1, "action_preserves_variety: size mismatch");
    for (int d : v.degs) require(d == v.degs.front(), "action_preserves_variety: mixed generator degrees");
    const FieldPtr& k = v.field();
    std::vector<MPoly> all = v.gens;
    for (const MPoly& g : v.gens) all.push_back(g.subst_linear(a.m));
    std::map<MPoly::Exps, int> index;
    Mat joint = span_matrix(k, all, index);
    int ngens = static_cast<int>(v.gens.size());
    Mat base(k, ngens, joint.cols);
    for (int i = 0; i < ngens; ++i)
        for (int j = 0; j < joint.cols; ++j) base.at(i, j) = joint.at(i, j);
    int base_rank = kernel_and_rank(base).rank;
    // each pullback joins the span iff appending it leaves the rank unchanged
    for (int g = 0; g < ngens; ++g) {
        Mat ext(k, ngens + 1, joint.cols);
        for (int i = 0; i < ngens; ++i)
            for (int j = 0; j < joint.cols; ++j) ext.at(i, j) = joint.at(i, j);
        for (int j = 0; j < joint.cols; ++j) ext.at(ngens, j) = joint.at(ngens + g, j);
        if (kernel_and_rank(ext).rank != base_rank) return false;
    }
    return true;
}

std::vector<BFRoot> point_preimage_on_curve(const PPoint& p, const CurveMap& c, unsigned ext) {
    require(p.dim() == c.n, "point_preimage_on_curve: dimension mismatch");
    const FieldPtr& k = c.field();
    // common roots of the cross forms f_i P_j - f_j P_i
    BinaryForm g;
    for (int i = 0; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) {
            BinaryForm cross = c.forms[static_cast<size_t>(i)].scale(p.c[static_cast<size_t>(j)]) -
                               c.forms[static_cast<size_t>(j)].scale(p.c[static_cast<size_t>(i)]);
            if (cross.is_zero()) continue;
            g = g.valid() ? bf_gcd(g, cross) : cross;
            if (g.degree() == 0) return {};
        }
    if (!g.valid()) {
        // all cross forms vanish identically: the curve is the constant point p
        throw std::runtime_error("point_preimage_on_curve: curve degenerates to the point");
    }
    std::vector<BFRoot> roots = (ext <= 1 || !k->finite()) ? bf_roots(g) : bf_roots_in_extension(g, ext);
    // keep only parameters whose image really is p (the curve value must be
    // nonzero there and proportional to p)
    const FieldPtr& kr = roots.empty() ? k : roots.front().s.field();
    std::vector<BFRoot> out;
    PPoint pk = p.convert(kr);
    CurveMap ck = kr->same(k) ? c : c.convert(kr);
    for (auto& r : roots) {
        std::vector<Elem> val = ck.eval(r.s, r.t);
        bool nonzero = false;
        for (const Elem& x : val) nonzero = nonzero || !x.is_zero();
        if (nonzero && vectors_proportional(val, pk.c)) out.push_back(r);
    }
    return out;
}

bool curves_same_image(const CurveMap& c1, const CurveMap& c2) {
    require(c1.n == c2.n, "curves_same_image: ambient mismatch");
    if (c1.d != c2.d) return false;
    require(is_smooth_rnc(c1) && is_smooth_rnc(c2), "curves_same_image: inputs must be embedded rational normal curves");
    const FieldPtr& k = c1.field();
    // preimages under c1 of three distinct points of c2
    Elem params[3][2] = {{k->one(), k->zero()}, {k->zero(), k->one()}, {k->one(), k->one()}};
    Elem pre[3][2];
    for (int i = 0; i < 3; ++i) {
        PPoint q(k, c2.eval(params[i][0], params[i][1]));
        auto roots = point_preimage_on_curve(q, c1);
        if (roots.empty()) return false;
        pre[i][0] = roots.front().s;
        pre[i][1] = roots.front().t;
    }
    // Moebius map sending (1:0),(0:1),(1:1) to the three preimages: scale the
    // first two columns so their sum hits the third
    Mat sys(k, 2, 2);
    sys.at(0, 0) = pre[0][0];
    sys.at(0, 1) = pre[1][0];
    sys.at(1, 0) = pre[0][1];
    sys.at(1, 1) = pre[1][1];
    Elem det = sys.at(0, 0) * sys.at(1, 1) - sys.at(0, 1) * sys.at(1, 0);
    if (det.is_zero()) return false;
    Elem alpha = (pre[2][0] * sys.at(1, 1) - pre[2][1] * sys.at(0, 1)) / det;
    Elem beta = (sys.at(0, 0) * pre[2][1] - sys.at(1, 0) * pre[2][0]) / det;
    if (alpha.is_zero() || beta.is_zero()) return false;
    Elem a = pre[0][0] * alpha, b = pre[1][0] * beta;
    Elem cc = pre[0][1] * alpha, dd = pre[1][1] * beta;
    // verify c2 = lambda * c1 o M coefficientwise
    std::vector<Elem> lhs, rhs;
    for (int i = 0; i <= c1.n; ++i) {
        BinaryForm f = c1.forms[static_cast<size_t>(i)].compose(a, b, cc, dd);
        for (int j = 0; j <= c1.d; ++j) {
            lhs.push_back(f.coeff(j));
            rhs.push_back(c2.forms[static_cast<size_t>(i)].coeff(j));
        }
    }
    return vectors_proportional(lhs, rhs);
}

int tangent_orbit_dimension(const std::vector<Mat>& generators, const PPoint& p) {
    const FieldPtr& k = p.k;
    int n = p.dim() + 1;
    Mat m(k, static_cast<int>(generators.size()) + 1, n);
    for (int j = 0; j < n; ++j) m.at(0, j) = p.c[static_cast<size_t>(j)];
    for (size_t g = 0; g < generators.size(); ++g) {
        require(generators[g].rows == n && generators[g].cols == n, "tangent_orbit_dimension: size mismatch");
        std::vector<Elem> v = generators[g].apply(p.c);
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(g) + 1, j) = v[static_cast<size_t>(j)];
    }
    return kernel_and_rank(m).rank - 1;
}

int line_curve_intersection_degree(const CurveMap& line, const CurveMap& c) {
    require(line.d == 1, "line_curve_intersection_degree: first argument must have degree 1");
    require(line.n == c.n, "line_curve_intersection_degree: ambient mismatch");
    const FieldPtr& k = c.field();
    // linear forms cutting the line: left kernel of the (n+1) x 2 span matrix
    Mat span(k, 2, line.n + 1);
    for (int i = 0; i <= line.n; ++i) {
        span.at(0, i) = line.forms[static_cast<size_t>(i)].coeff(0);
        span.at(1, i) = line.forms[static_cast<size_t>(i)].coeff(1);
    }
    auto kr = kernel_and_rank(span);
    require(kr.rank == 2, "line_curve_intersection_degree: input does not span a line");
    BinaryForm g;
    bool all_zero = true;
    for (const auto& lam : kr.kernel) {
        BinaryForm pulled(k, c.d);
        for (int i = 0; i <= c.n; ++i) pulled = pulled + c.forms[static_cast<size_t>(i)].scale(lam[static_cast<size_t>(i)]);
        if (pulled.is_zero()) continue;
        all_zero = false;
        g = g.valid() ? bf_gcd(g, pulled) : pulled;
        if (g.degree() == 0) return 0;
    }
    require(!all_zero, "line_curve_intersection_degree: curve contained in the line");
    return g.degree();
}

} // namespace fano
