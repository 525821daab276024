#include "twistlab/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "twistlab/quadrature.hpp"

namespace twistlab {

// ---------------------------------------------------------------- lattice --

FrequencyLattice FrequencyLattice::make(int d, std::vector<int> lows, std::vector<int> highs) {
    if (d < 1) throw PreconditionError("lattice: d must be positive");
    if (static_cast<int>(lows.size()) != d || static_cast<int>(highs.size()) != d)
        throw PreconditionError("lattice: lows/highs must have d entries");
    for (int a = 0; a < d; ++a)
        if (lows[a] < 0 || highs[a] < 0)
            throw PreconditionError("lattice: lows/highs must be non-negative");
    FrequencyLattice L;
    L.d = d;
    L.lows = std::move(lows);
    L.highs = std::move(highs);
    return L;
}

std::size_t FrequencyLattice::size() const {
    std::size_t s = 1;
    for (int a = 0; a < d; ++a) s *= static_cast<std::size_t>(lows[a] + highs[a] + 1);
    return s;
}

std::vector<std::vector<int>> FrequencyLattice::all() const {
    std::vector<std::vector<int>> out;
    out.reserve(size());
    std::vector<int> nu(d);
    for (int a = 0; a < d; ++a) nu[a] = -lows[a];
    for (;;) {
        out.push_back(nu);
        int a = d - 1;
        while (a >= 0) {
            if (++nu[a] <= highs[a]) break;
            nu[a] = -lows[a];
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

bool FrequencyLattice::contains(const std::vector<int>& nu) const {
    if (static_cast<int>(nu.size()) != d) return false;
    for (int a = 0; a < d; ++a)
        if (nu[a] < -lows[a] || nu[a] > highs[a]) return false;
    return true;
}

int FrequencyLattice::max_abs() const {
    int m = 0;
    for (int a = 0; a < d; ++a) m = std::max({m, lows[a], highs[a]});
    return m;
}

// ---------------------------------------------------- coefficient function --

CoefficientFunction CoefficientFunction::zero(int d) { return constant(d, 0.0); }

CoefficientFunction CoefficientFunction::constant(int d, Cx c) {
    CoefficientFunction f;
    f.d_ = d;
    Piece p;
    p.lo.assign(d, 0.0);
    p.hi.assign(d, 1.0);
    p.expr = Expression::constant(c);
    f.pieces_.push_back(std::move(p));
    f.holder_ = 1.0;
    return f;
}

CoefficientFunction CoefficientFunction::piecewise(int d, std::vector<Piece> pieces,
                                                   double holder) {
    if (pieces.empty()) throw PreconditionError("coefficient: needs at least one piece");
    if (holder <= 0.0 || holder > 1.0)
        throw PreconditionError("coefficient: holder exponent must be in (0,1]");
    for (const auto& p : pieces) {
        if (static_cast<int>(p.lo.size()) != d || static_cast<int>(p.hi.size()) != d)
            throw PreconditionError("coefficient: piece box dimension mismatch");
        for (int a = 0; a < d; ++a)
            if (!(0.0 <= p.lo[a] && p.lo[a] < p.hi[a] && p.hi[a] <= 1.0))
                throw PreconditionError("coefficient: piece box must satisfy 0<=lo<hi<=1");
    }
    CoefficientFunction f;
    f.d_ = d;
    f.pieces_ = std::move(pieces);
    f.holder_ = holder;
    return f;
}

CoefficientFunction CoefficientFunction::smooth(int d,
                                                std::function<Cx(const std::vector<double>&)> fn,
                                                double holder) {
    CoefficientFunction f;
    f.d_ = d;
    f.fn_ = std::move(fn);
    f.holder_ = holder;
    return f;
}

Cx CoefficientFunction::operator()(const std::vector<double>& x) const {
    if (fn_) return fn_(x);
    for (const auto& p : pieces_) {
        bool inside = true;
        for (int a = 0; a < d_ && inside; ++a) {
            const bool in_half_open = p.lo[a] <= x[a] && x[a] < p.hi[a];
            const bool closed_right = p.hi[a] == 1.0 && x[a] == 1.0;
            inside = in_half_open || closed_right;
        }
        if (inside) return p.expr.eval(x);
    }
    throw PreconditionError("coefficient: point not covered by any piece");
}

// ----------------------------------------------------------------- symbol --

Symbol::Symbol(int d, FrequencyLattice lattice,
               std::map<std::vector<int>, CoefficientFunction> coeffs, SingularSet singularities,
               std::string label)
    : d_(d),
      lattice_(std::move(lattice)),
      coeffs_(std::move(coeffs)),
      singularities_(std::move(singularities)),
      label_(std::move(label)) {
    if (lattice_.d != d_) throw PreconditionError("symbol: lattice dimension mismatch");
    for (const auto& [nu, cf] : coeffs_) {
        if (!lattice_.contains(nu)) throw PreconditionError("symbol: coefficient outside lattice");
        if (cf.d() != d_) throw PreconditionError("symbol: coefficient dimension mismatch");
    }
    for (const auto& nu : lattice_.all())
        if (!coeffs_.count(nu)) coeffs_.emplace(nu, CoefficientFunction::zero(d_));
}

const CoefficientFunction& Symbol::coeff(const std::vector<int>& nu) const {
    auto it = coeffs_.find(nu);
    if (it == coeffs_.end()) throw PreconditionError("symbol: frequency outside lattice");
    return it->second;
}

double Symbol::holder_exponent() const {
    double h = 1.0;
    for (const auto& [nu, cf] : coeffs_) h = std::min(h, cf.holder_exponent());
    return h;
}

// ------------------------------------------------------------- operations --

static double wrap_unit(double t) {
    double w = t - std::floor(t);
    if (w < 0.0) w += 1.0;
    if (w >= 1.0) w -= 1.0;
    return w;
}

Cx eval_symbol(const Symbol& sym, const std::vector<double>& x, const std::vector<double>& xi) {
    const int d = sym.d();
    if (static_cast<int>(x.size()) != d || static_cast<int>(xi.size()) != d)
        throw PreconditionError("eval_symbol: point dimension mismatch");
    for (int a = 0; a < d; ++a)
        if (x[a] < 0.0 || x[a] > 1.0) throw std::domain_error("eval_symbol: x outside [0,1]^d");
    std::vector<double> xw(xi.size());
    for (std::size_t a = 0; a < xi.size(); ++a) xw[a] = wrap_unit(xi[a]);
    Cx acc = 0.0;
    for (const auto& [nu, cf] : sym.coeffs()) {
        double phase = 0.0;
        for (int a = 0; a < d; ++a) phase += nu[a] * xw[a];
        acc += cf(x) * std::polar(1.0, kTwoPi * phase);
    }
    return acc;
}

std::vector<Cx> project_to_lattice(const std::vector<Cx>& samples, const std::vector<int>& grid,
                                   const FrequencyLattice& lattice) {
    const int d = lattice.d;
    if (static_cast<int>(grid.size()) != d)
        throw PreconditionError("project_to_lattice: grid dimension mismatch");
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) {
        const int need = 4 * (std::max(lattice.lows[a], lattice.highs[a]) + 1);
        if (grid[a] < need)
            throw PreconditionError("project_to_lattice: grid undersampled (need >= " +
                                    std::to_string(need) + " per axis)");
        total *= static_cast<std::size_t>(grid[a]);
    }
    if (samples.size() != total)
        throw PreconditionError("project_to_lattice: sample count does not match grid");

    const auto freqs = lattice.all();
    std::vector<Cx> out(freqs.size(), 0.0);
    std::vector<int> t(d, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        const Cx v = samples[flat];
        for (std::size_t q = 0; q < freqs.size(); ++q) {
            double phase = 0.0;
            for (int a = 0; a < d; ++a)
                phase += static_cast<double>(freqs[q][a]) * t[a] / grid[a];
            out[q] += v * std::polar(1.0, -kTwoPi * phase);
        }
        int a = d - 1;
        while (a >= 0) {
            if (++t[a] < grid[a]) break;
            t[a] = 0;
            --a;
        }
    }
    for (auto& c : out) c /= static_cast<double>(total);
    return out;
}

MollifierSpec MollifierSpec::make(int d, double eta, int quad_nodes) {
    if (!(eta > 0.0 && eta < 0.25))
        throw PreconditionError("mollifier: eta must lie in (0, 1/4)");
    if (quad_nodes < 8) throw PreconditionError("mollifier: too few quadrature nodes");
    MollifierSpec spec;
    spec.d = d;
    spec.eta = eta;
    spec.quad_nodes = quad_nodes;

    // Normalize against the same tensor rule mollify uses, then require the
    // doubled rule to agree to 1e-10 so ∫ψ = 1 holds at that tolerance.
    auto raw_integral = [d](int n) {
        std::function<double(int, std::vector<double>&)> rec =
            [&](int axis, std::vector<double>& y) -> double {
            if (axis == d) {
                double r2 = 0.0;
                for (double v : y) r2 += v * v;
                return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0;
            }
            return integrate_gl(
                [&](double t) {
                    y[axis] = t;
                    return rec(axis + 1, y);
                },
                -1.0, 1.0, n);
        };
        std::vector<double> y(d, 0.0);
        return rec(0, y);
    };
    const double coarse = raw_integral(quad_nodes);
    const double fine = raw_integral(2 * quad_nodes);
    if (std::abs(coarse - fine) > 1e-10)
        throw AccuracyError("mollifier: bump normalization quadrature did not converge");
    spec.norm_const = 1.0 / coarse;
    return spec;
}

double bump(const std::vector<double>& y, const MollifierSpec& spec) {
    if (static_cast<int>(y.size()) != spec.d)
        throw PreconditionError("bump: dimension mismatch");
    double r2 = 0.0;
    for (double v : y) r2 += v * v;
    if (r2 >= 1.0) return 0.0;
    return spec.norm_const * std::exp(-1.0 / (1.0 - r2));
}

namespace {

// Periodic extension of a coefficient: values on (0,1]^d repeated with period
// 1, i.e. x = 0 takes the x = 1 values (the paper's gluing convention).
Cx eval_periodic(const CoefficientFunction& cf, std::vector<double>& scratch,
                 const std::vector<double>& u) {
    for (std::size_t a = 0; a < u.size(); ++a) {
        double w = u[a] - std::floor(u[a]);
        if (w == 0.0) w = 1.0;
        scratch[a] = w;
    }
    return cf(scratch);
}

// Breakpoints in y ∈ (-1,1) where x_a - heta*y crosses a singular coordinate
// (declared points plus the gluing locus at integers).
std::vector<double> axis_breakpoints(double x, double heta, const std::vector<double>& sing_coords) {
    std::vector<double> bp;
    for (double u : sing_coords) {
        // solve x - heta*y = u + k over integers k with |y| < 1
        const int kmin = static_cast<int>(std::floor(x - u - heta));
        const int kmax = static_cast<int>(std::ceil(x - u + heta));
        for (int k = kmin; k <= kmax; ++k) {
            const double y = (x - u - k) / heta;
            if (y > -1.0 && y < 1.0) bp.push_back(y);
        }
    }
    std::sort(bp.begin(), bp.end());
    return bp;
}

struct MollifyContext {
    CoefficientFunction cf;
    std::vector<std::vector<double>> sing_by_axis;  // singular coordinates per axis
    double heta;
    MollifierSpec spec;
};

Cx mollified_value(const MollifyContext& ctx, const std::vector<double>& x, int nodes) {
    const int d = ctx.spec.d;
    std::vector<double> y(d, 0.0), arg(d, 0.0), scratch(d, 0.0);
    std::function<Cx(int)> rec = [&](int axis) -> Cx {
        if (axis == d) {
            double r2 = 0.0;
            for (double v : y) r2 += v * v;
            if (r2 >= 1.0) return Cx(0.0, 0.0);
            for (int a = 0; a < d; ++a) arg[a] = x[a] - ctx.heta * y[a];
            return eval_periodic(ctx.cf, scratch, arg) * ctx.spec.norm_const *
                   std::exp(-1.0 / (1.0 - r2));
        }
        const auto bp = axis_breakpoints(x[axis], ctx.heta, ctx.sing_by_axis[axis]);
        return integrate_split_cx(
            [&](double t) {
                y[axis] = t;
                return rec(axis + 1);
            },
            -1.0, 1.0, bp, nodes);
    };
    return rec(0);
}

}  // namespace

Symbol mollify(const Symbol& sym, double h, const MollifierSpec& spec) {
    if (!(h > 0.0 && h <= 1.0)) throw PreconditionError("mollify: need 0 < h <= 1");
    if (spec.d != sym.d()) throw PreconditionError("mollify: mollifier dimension mismatch");
    if (spec.norm_const <= 0.0)
        throw PreconditionError("mollify: spec not normalized (use MollifierSpec::make)");

    const int d = sym.d();
    const double heta = std::pow(h, spec.eta);

    // Singular coordinates per axis: declared set plus the periodic gluing at 0.
    std::vector<std::vector<double>> sing_by_axis(d);
    for (int a = 0; a < d; ++a) sing_by_axis[a].push_back(0.0);
    if (d == 1) {
        for (double p : sym.singularities().points) sing_by_axis[0].push_back(wrap_unit(p));
    } else {
        for (const auto& pl : sym.singularities().planes)
            sing_by_axis[pl.axis].push_back(wrap_unit(pl.coord));
    }
    for (auto& v : sing_by_axis) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::map<std::vector<int>, CoefficientFunction> out;
    for (const auto& [nu, cf] : sym.coeffs()) {
        MollifyContext ctx{cf, sing_by_axis, heta, spec};
        auto fn = [ctx](const std::vector<double>& x) -> Cx {
            const Cx coarse = mollified_value(ctx, x, ctx.spec.quad_nodes);
            const Cx fine = mollified_value(ctx, x, 2 * ctx.spec.quad_nodes);
            if (std::abs(fine - coarse) > 1e-6 * std::max(1.0, std::abs(fine)))
                throw AccuracyError("mollify: quadrature did not converge");
            return fine;
        };
        out.emplace(nu, CoefficientFunction::smooth(d, std::move(fn), 1.0));
    }
    return Symbol(d, sym.lattice(), std::move(out), SingularSet{},
                  "mollified(" + sym.label() + ")");
}

DecayCheck coeff_decay_check(const Symbol& sym, int k, int x_samples) {
    if (k < 0) throw PreconditionError("coeff_decay_check: k must be non-negative");
    if (x_samples < 1) throw PreconditionError("coeff_decay_check: x_samples must be positive");
    const int d = sym.d();
    const int per_axis =
        std::max(1, static_cast<int>(std::ceil(std::pow(double(x_samples), 1.0 / d))));
    double c_k = 0.0;
    std::vector<int> t(d, 0);
    std::vector<double> x(d, 0.0);
    for (;;) {
        for (int a = 0; a < d; ++a) x[a] = (t[a] + 0.5) / per_axis;
        for (const auto& [nu, cf] : sym.coeffs()) {
            double n2 = 1.0;
            for (int a = 0; a < d; ++a) n2 += double(nu[a]) * nu[a];
            c_k = std::max(c_k, std::abs(cf(x)) * std::pow(std::sqrt(n2), k));
        }
        int a = d - 1;
        while (a >= 0) {
            if (++t[a] < per_axis) break;
            t[a] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return DecayCheck{c_k, std::isfinite(c_k)};
}

// ------------------------------------------------------- built-in library --

static Symbol make_jordan() {
    auto lat = FrequencyLattice::make(1, {0}, {1});
    std::map<std::vector<int>, CoefficientFunction> coeffs;
    coeffs.emplace(std::vector<int>{1}, CoefficientFunction::constant(1, 1.0));
    return Symbol(1, lat, std::move(coeffs), SingularSet{}, "jordan");
}

static Symbol make_hpm_example() {
    auto lat = FrequencyLattice::make(1, {1}, {1});
    std::vector<Piece> pieces(3);
    pieces[0].lo = {0.0};
    pieces[0].hi = {1.0 / 3.0};
    pieces[0].expr = Expression::parse("sqrt(x) - 5/2", 1);
    pieces[1].lo = {1.0 / 3.0};
    pieces[1].hi = {2.0 / 3.0};
    pieces[1].expr = Expression::parse("abs(12*x - 6) - 1", 1);
    pieces[2].lo = {2.0 / 3.0};
    pieces[2].hi = {1.0};
    pieces[2].expr = Expression::parse("1/2 + exp(3*(1 - x))", 1);

    std::map<std::vector<int>, CoefficientFunction> coeffs;
    coeffs.emplace(std::vector<int>{0}, CoefficientFunction::piecewise(1, std::move(pieces), 0.5));
    coeffs.emplace(std::vector<int>{-1}, CoefficientFunction::constant(1, Cx(0.0, 0.5)));
    coeffs.emplace(std::vector<int>{1}, CoefficientFunction::constant(1, Cx(0.0, 0.5)));

    SingularSet sing;
    sing.points = {0.0, 1.0 / 3.0, 2.0 / 3.0};
    return Symbol(1, lat, std::move(coeffs), std::move(sing), "hpm_example");
}

static Symbol make_bidiagonal(Cx a, Cx b) {
    auto lat = FrequencyLattice::make(1, {1}, {1});
    std::map<std::vector<int>, CoefficientFunction> coeffs;
    coeffs.emplace(std::vector<int>{1}, CoefficientFunction::constant(1, a));
    coeffs.emplace(std::vector<int>{-1}, CoefficientFunction::constant(1, b));
    std::ostringstream label;
    label << "bidiagonal(" << format_double(a.real());
    if (a.imag() != 0.0) label << "+" << format_double(a.imag()) << "i";
    label << "," << format_double(b.real());
    if (b.imag() != 0.0) label << "+" << format_double(b.imag()) << "i";
    label << ")";
    return Symbol(1, lat, std::move(coeffs), SingularSet{}, label.str());
}

Symbol symbol_from_library(const std::string& name) {
    if (name == "jordan") return make_jordan();
    if (name == "hpm_example") return make_hpm_example();
    if (name.rfind("bidiagonal(", 0) == 0 && name.back() == ')') {
        const std::string args = name.substr(11, name.size() - 12);
        const auto comma = args.find(',');
        if (comma == std::string::npos)
            throw PreconditionError("symbol library: bidiagonal needs two arguments");
        const Cx a = Expression::parse(args.substr(0, comma), 0).eval({});
        const Cx b = Expression::parse(args.substr(comma + 1), 0).eval({});
        return make_bidiagonal(a, b);
    }
    throw PreconditionError("symbol library: unknown symbol \"" + name + "\"");
}

// ------------------------------------------------------------ manifest IO --

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Symbol parse_symbol_manifest(const std::string& text) {
    int d = 1;
    std::string label = "symbol";
    std::vector<int> lows, highs;
    SingularSet sing;
    std::map<std::vector<int>, std::vector<Piece>> piece_map;
    std::map<std::vector<int>, double> holder_map;
    std::vector<int> current;
    bool in_coeff = false;

    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        std::string line = trim(raw);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw PreconditionError("manifest: malformed section " + line);
            const std::string inner = trim(line.substr(1, line.size() - 2));
            if (inner.rfind("coeff", 0) != 0)
                throw PreconditionError("manifest: unknown section " + inner);
            std::istringstream cs(inner.substr(5));
            current.clear();
            int v;
            while (cs >> v) current.push_back(v);
            if (current.empty()) throw PreconditionError("manifest: coeff section needs indices");
            in_coeff = true;
            piece_map[current];  // create
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw PreconditionError("manifest: expected key = value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!in_coeff) {
            if (key == "d") d = static_cast<int>(parse_number(value));
            else if (key == "label") label = value;
            else if (key == "lows" || key == "highs") {
                auto& dst = key == "lows" ? lows : highs;
                dst.clear();
                for (const auto& tok : split(value, ','))
                    dst.push_back(static_cast<int>(parse_number(trim(tok))));
            } else if (key == "singular_points") {
                for (const auto& tok : split(value, ','))
                    if (!trim(tok).empty()) sing.points.push_back(parse_number(trim(tok)));
            } else if (key == "singular_planes") {
                for (const auto& tok : split(value, ',')) {
                    const auto colon = tok.find(':');
                    if (colon == std::string::npos)
                        throw PreconditionError("manifest: singular_planes entries are axis:coord");
                    SingularSet::Plane pl;
                    pl.axis = static_cast<int>(parse_number(trim(tok.substr(0, colon))));
                    pl.coord = parse_number(trim(tok.substr(colon + 1)));
                    sing.planes.push_back(pl);
                }
            } else {
                throw PreconditionError("manifest: unknown key " + key);
            }
        } else {
            if (key == "holder") {
                holder_map[current] = parse_number(value);
            } else if (key == "piece") {
                const auto colon = value.rfind(':');
                if (colon == std::string::npos)
                    throw PreconditionError("manifest: piece is \"lo1, hi1, ... : expr\"");
                const auto bounds = split(value.substr(0, colon), ',');
                if (static_cast<int>(bounds.size()) != 2 * d)
                    throw PreconditionError("manifest: piece needs 2*d bounds");
                Piece p;
                p.lo.resize(d);
                p.hi.resize(d);
                for (int a = 0; a < d; ++a) {
                    p.lo[a] = parse_number(trim(bounds[2 * a]));
                    p.hi[a] = parse_number(trim(bounds[2 * a + 1]));
                }
                p.expr = Expression::parse(trim(value.substr(colon + 1)), d);
                piece_map[current].push_back(std::move(p));
            } else {
                throw PreconditionError("manifest: unknown coeff key " + key);
            }
        }
    }

    if (lows.empty()) lows.assign(d, 0);
    if (highs.empty()) highs.assign(d, 0);
    auto lat = FrequencyLattice::make(d, lows, highs);
    std::map<std::vector<int>, CoefficientFunction> coeffs;
    for (auto& [nu, pieces] : piece_map) {
        const double holder = holder_map.count(nu) ? holder_map[nu] : 1.0;
        if (pieces.empty()) continue;
        coeffs.emplace(nu, CoefficientFunction::piecewise(d, std::move(pieces), holder));
    }
    return Symbol(d, lat, std::move(coeffs), std::move(sing), label);
}

std::string serialize_symbol_manifest(const Symbol& sym) {
    std::ostringstream os;
    os << "# twistlab symbol manifest\n";
    os << "d = " << sym.d() << "\n";
    os << "label = " << sym.label() << "\n";
    os << "lows = ";
    for (int a = 0; a < sym.d(); ++a) os << (a ? ", " : "") << sym.lattice().lows[a];
    os << "\nhighs = ";
    for (int a = 0; a < sym.d(); ++a) os << (a ? ", " : "") << sym.lattice().highs[a];
    os << "\n";
    if (!sym.singularities().points.empty()) {
        os << "singular_points = ";
        bool first = true;
        for (double p : sym.singularities().points) {
            os << (first ? "" : ", ") << format_double(p);
            first = false;
        }
        os << "\n";
    }
    if (!sym.singularities().planes.empty()) {
        os << "singular_planes = ";
        bool first = true;
        for (const auto& pl : sym.singularities().planes) {
            os << (first ? "" : ", ") << pl.axis << ":" << format_double(pl.coord);
            first = false;
        }
        os << "\n";
    }
    for (const auto& [nu, cf] : sym.coeffs()) {
        if (!cf.closed_form())
            throw PreconditionError("manifest: cannot serialize non-closed-form coefficient");
        // skip identically-zero fill-ins
        if (cf.pieces().size() == 1 && cf.pieces()[0].expr.source() == "0") continue;
        os << "\n[coeff";
        for (int v : nu) os << " " << v;
        os << "]\n";
        os << "holder = " << format_double(cf.holder_exponent()) << "\n";
        for (const auto& p : cf.pieces()) {
            os << "piece = ";
            for (int a = 0; a < sym.d(); ++a) {
                if (a) os << ", ";
                os << format_double(p.lo[a]) << ", " << format_double(p.hi[a]);
            }
            os << " : " << p.expr.source() << "\n";
        }
    }
    return os.str();
}

Symbol read_symbol_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("manifest: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_symbol_manifest(ss.str());
}

void write_symbol_manifest(const Symbol& sym, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("manifest: cannot write " + path);
    out << serialize_symbol_manifest(sym);
}

Symbol resolve_symbol(const std::string& ref) {
    if (ref.find('/') != std::string::npos || ref.find(".manifest") != std::string::npos ||
        ref.find(".txt") != std::string::npos) {
        return read_symbol_manifest(ref);
    }
    return symbol_from_library(ref);
}

}  // namespace twistlab
