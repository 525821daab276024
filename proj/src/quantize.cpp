#include "twistlab/quantize.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace twistlab {

std::string convention_name(QuantizationConvention c) {
    return c == QuantizationConvention::paper_matrix ? "paper_matrix" : "convolution";
}

QuantizationConvention convention_from_name(const std::string& name) {
    if (name == "paper_matrix") return QuantizationConvention::paper_matrix;
    if (name == "convolution") return QuantizationConvention::convolution;
    throw PreconditionError("unknown quantization convention: " + name);
}

QuantMatrix build_matrix(const Symbol& sym, int N, QuantizationConvention conv) {
    const int d = sym.d();
    if (N <= sym.lattice().max_abs())
        throw PreconditionError("build_matrix: N must exceed the max lattice frequency");
    MultiIndexer idx(d, N);
    QuantMatrix out;
    out.data = MatrixXcd::Zero(idx.size(), idx.size());
    out.meta =
        QuantMeta{N, d, sym.label(), conv, sym.label().rfind("mollified(", 0) == 0, 0.0};

    std::vector<double> x(d);
    std::vector<int> j(d);
    for (const auto& [nu, cf] : sym.coeffs()) {
        for (std::size_t fs = 0; fs < idx.size(); ++fs) {
            const auto s = idx.unflatten(fs);
            bool ok = true;
            for (int a = 0; a < d && ok; ++a) {
                // paper_matrix: entry (s, j) = p_{j-s}(x_s)  =>  j = s + nu
                // convolution: entry (s, j) = p_{s-j}(x_s)  =>  j = s - nu
                j[a] = conv == QuantizationConvention::paper_matrix ? s[a] + nu[a] : s[a] - nu[a];
                ok = 1 <= j[a] && j[a] <= N;
            }
            if (!ok) continue;
            for (int a = 0; a < d; ++a) x[a] = static_cast<double>(s[a]) / N;
            out.data(fs, idx.flatten(j)) = cf(x);
        }
    }
    return out;
}

double operator_norm(const MatrixXcd& M) {
    if (M.size() == 0) return 0.0;
    return singular_values_dense(M)(0);
}

double operator_norm(const QuantMatrix& M) { return operator_norm(M.data); }

// ------------------------------------------------------------ torus table --

namespace {

std::size_t box_size(int d, int K) {
    std::size_t s = 1;
    for (int a = 0; a < d; ++a) s *= static_cast<std::size_t>(2 * K + 1);
    return s;
}

std::size_t box_flat(const std::vector<int>& v, int K) {
    std::size_t flat = 0;
    for (int x : v) flat = flat * (2 * K + 1) + static_cast<std::size_t>(x + K);
    return flat;
}

// One-axis DFT of a flattened tensor: sizes[axis] samples -> 2K+1 frequencies.
std::vector<Cx> dft_axis(const std::vector<Cx>& in, std::vector<int>& sizes, int axis, int K) {
    const int g = sizes[axis];
    const int out_n = 2 * K + 1;
    std::size_t stride = 1;
    for (std::size_t b = axis + 1; b < sizes.size(); ++b) stride *= sizes[b];
    std::size_t blocks = 1;
    for (int b = 0; b < axis; ++b) blocks *= sizes[b];

    std::vector<Cx> twiddle(static_cast<std::size_t>(out_n) * g);
    for (int f = -K; f <= K; ++f)
        for (int t = 0; t < g; ++t)
            twiddle[static_cast<std::size_t>(f + K) * g + t] =
                std::polar(1.0 / g, -kTwoPi * f * t / g);

    std::vector<Cx> out(blocks * out_n * stride);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t a = 0; a < stride; ++a) {
            const Cx* src = in.data() + (b * g) * stride + a;
            for (int f = 0; f < out_n; ++f) {
                Cx acc = 0.0;
                const Cx* tw = twiddle.data() + static_cast<std::size_t>(f) * g;
                for (int t = 0; t < g; ++t) acc += src[t * stride] * tw[t];
                out[(b * out_n + f) * stride + a] = acc;
            }
        }
    sizes[axis] = out_n;
    return out;
}

}  // namespace

Cx TorusCoeffTable::at(const std::vector<int>& n, const std::vector<int>& m) const {
    return c[box_flat(n, K_n) * box_size(d, K_m) + box_flat(m, K_m)];
}

Cx& TorusCoeffTable::at(const std::vector<int>& n, const std::vector<int>& m) {
    return c[box_flat(n, K_n) * box_size(d, K_m) + box_flat(m, K_m)];
}

double TorusCoeffTable::boundary_max_abs() const {
    double worst = 0.0;
    std::vector<int> n(d, -K_n), m(d, -K_m);
    const std::size_t nn = box_size(d, K_n), mm = box_size(d, K_m);
    for (std::size_t i = 0; i < nn; ++i) {
        std::size_t rest = i;
        bool n_edge = false;
        for (int a = d - 1; a >= 0; --a) {
            n[a] = static_cast<int>(rest % (2 * K_n + 1)) - K_n;
            rest /= (2 * K_n + 1);
            n_edge = n_edge || std::abs(n[a]) == K_n;
        }
        for (std::size_t q = 0; q < mm; ++q) {
            std::size_t r2 = q;
            bool m_edge = false;
            for (int a = d - 1; a >= 0; --a) {
                m[a] = static_cast<int>(r2 % (2 * K_m + 1)) - K_m;
                r2 /= (2 * K_m + 1);
                m_edge = m_edge || std::abs(m[a]) == K_m;
            }
            if (n_edge || m_edge) worst = std::max(worst, std::abs(c[i * mm + q]));
        }
    }
    return worst;
}

TorusCoeffTable torus_coeffs(const std::vector<Cx>& samples, const std::vector<int>& grid, int d,
                             int K_n, int K_m) {
    if (d < 1 || K_n < 0 || K_m < 0) throw PreconditionError("torus_coeffs: bad parameters");
    if (static_cast<int>(grid.size()) != 2 * d)
        throw PreconditionError("torus_coeffs: grid needs 2*d axes");
    std::size_t total = 1;
    for (int a = 0; a < 2 * d; ++a) {
        const int K = a < d ? K_n : K_m;
        if (grid[a] < 4 * (K + 1))
            throw PreconditionError("torus_coeffs: grid undersampled (need >= 4*(K+1) per axis)");
        total *= static_cast<std::size_t>(grid[a]);
    }
    if (samples.size() != total)
        throw PreconditionError("torus_coeffs: sample count does not match grid");

    std::vector<Cx> data = samples;
    std::vector<int> sizes = grid;
    for (int a = 0; a < 2 * d; ++a) data = dft_axis(data, sizes, a, a < d ? K_n : K_m);

    TorusCoeffTable table;
    table.d = d;
    table.K_n = K_n;
    table.K_m = K_m;
    table.c = std::move(data);
    return table;
}

TorusCoeffTable torus_coeffs_of(
    const std::function<Cx(const std::vector<double>&, const std::vector<double>&)>& f, int d,
    int K_n, int K_m) {
    std::vector<int> grid(2 * d);
    for (int a = 0; a < 2 * d; ++a) grid[a] = 4 * ((a < d ? K_n : K_m) + 1);
    std::size_t total = 1;
    for (int g : grid) total *= static_cast<std::size_t>(g);
    std::vector<Cx> samples(total);
    std::vector<int> t(2 * d, 0);
    std::vector<double> x(d), xi(d);
    for (std::size_t flat = 0; flat < total; ++flat) {
        for (int a = 0; a < d; ++a) x[a] = static_cast<double>(t[a]) / grid[a];
        for (int a = 0; a < d; ++a) xi[a] = static_cast<double>(t[d + a]) / grid[d + a];
        samples[flat] = f(x, xi);
        int a = 2 * d - 1;
        while (a >= 0) {
            if (++t[a] < grid[a]) break;
            t[a] = 0;
            --a;
        }
    }
    return torus_coeffs(samples, grid, d, K_n, K_m);
}

TorusCoeffTable torus_coeffs_of_symbol(const Symbol& sym, int K_n) {
    const int d = sym.d();
    const int K_m = sym.lattice().max_abs();
    TorusCoeffTable table;
    table.d = d;
    table.K_n = K_n;
    table.K_m = K_m;
    table.c.assign(box_size(d, K_n) * box_size(d, K_m), Cx(0.0, 0.0));

    // x-expansion of each lattice coefficient; m outside Λ stays zero.
    const int g = 4 * (K_n + 1);
    std::vector<int> grid(d, g);
    const FrequencyLattice xlat = FrequencyLattice::make(d, std::vector<int>(d, K_n),
                                                         std::vector<int>(d, K_n));
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) total *= static_cast<std::size_t>(g);

    for (const auto& [m, cf] : sym.coeffs()) {
        std::vector<Cx> samples(total);
        std::vector<int> t(d, 0);
        std::vector<double> x(d);
        for (std::size_t flat = 0; flat < total; ++flat) {
            for (int a = 0; a < d; ++a) x[a] = static_cast<double>(t[a]) / g;
            samples[flat] = cf(x);
            int a = d - 1;
            while (a >= 0) {
                if (++t[a] < g) break;
                t[a] = 0;
                --a;
            }
        }
        const auto coeffs = project_to_lattice(samples, grid, xlat);
        const auto freqs = xlat.all();
        for (std::size_t q = 0; q < freqs.size(); ++q) table.at(freqs[q], m) = coeffs[q];
    }
    return table;
}

QuantMatrix build_torus_matrix(const TorusCoeffTable& table, int N, double t) {
    if (t != 0.5 && t != 1.0)
        throw PreconditionError("build_torus_matrix: only t = 1/2 and t = 1 are supported");
    const int d = table.d;
    MultiIndexer idx(d, N);
    QuantMatrix out;
    out.data = MatrixXcd::Zero(idx.size(), idx.size());
    out.meta = QuantMeta{N, d, "torus", QuantizationConvention::paper_matrix, false, 0.0};

    const std::size_t nn = box_size(d, table.K_n);
    const std::size_t mm = box_size(d, table.K_m);
    std::vector<int> n(d), m(d), r(d), diff(d), s(d), j(d), r_lo(d), r_hi(d);

    for (std::size_t in = 0; in < nn; ++in) {
        std::size_t rest = in;
        for (int a = d - 1; a >= 0; --a) {
            n[a] = static_cast<int>(rest % (2 * table.K_n + 1)) - table.K_n;
            rest /= (2 * table.K_n + 1);
        }
        for (std::size_t im = 0; im < mm; ++im) {
            const Cx coeff = table.c[in * mm + im];
            if (coeff == Cx(0.0, 0.0)) continue;
            std::size_t r2 = im;
            for (int a = d - 1; a >= 0; --a) {
                m[a] = static_cast<int>(r2 % (2 * table.K_m + 1)) - table.K_m;
                r2 /= (2 * table.K_m + 1);
            }
            // admissible wraps: |m_a - r_a N| <= N-1 per axis (at most two r_a each)
            for (int a = 0; a < d; ++a) {
                r_lo[a] = static_cast<int>(std::ceil((m[a] - (N - 1)) / static_cast<double>(N)));
                r_hi[a] = static_cast<int>(std::floor((m[a] + (N - 1)) / static_cast<double>(N)));
            }
            r = r_lo;
            for (;;) {
                double n_dot_r = 0.0, n_dot_diff = 0.0;
                for (int a = 0; a < d; ++a) {
                    diff[a] = m[a] - r[a] * N;
                    n_dot_r += static_cast<double>(n[a]) * r[a];
                    n_dot_diff += static_cast<double>(n[a]) * diff[a];
                }
                // entries along the diagonal j - s = diff
                for (int a = 0; a < d; ++a) s[a] = std::max(1, 1 - diff[a]);
                for (;;) {
                    bool valid = true;
                    double n_dot_s = 0.0;
                    for (int a = 0; a < d; ++a) {
                        j[a] = s[a] + diff[a];
                        valid = valid && j[a] >= 1 && j[a] <= N;
                        n_dot_s += static_cast<double>(n[a]) * s[a];
                    }
                    if (valid) {
                        const double theta =
                            kTwoPi / N * (n_dot_s + (1.0 - t) * n_dot_diff) - kTwoPi * t * n_dot_r;
                        out.data(idx.flatten(s), idx.flatten(j)) += coeff * std::polar(1.0, theta);
                    }
                    int a = d - 1;
                    while (a >= 0) {
                        if (++s[a] <= std::min(N, N - diff[a])) break;
                        s[a] = std::max(1, 1 - diff[a]);
                        --a;
                    }
                    if (a < 0) break;
                }
                int a = d - 1;
                while (a >= 0) {
                    if (++r[a] <= r_hi[a]) break;
                    r[a] = r_lo[a];
                    --a;
                }
                if (a < 0) break;
            }
        }
    }
    return out;
}

TraceCheck trace_formula_check(const TorusCoeffTable& table, int N) {
    const QuantMatrix F = build_torus_matrix(table, N, 0.5);
    const Cx lhs = F.data.trace();
    const std::vector<int> zero(table.d, 0);
    Cx rhs = table.at(zero, zero);
    for (int a = 0; a < table.d; ++a) rhs *= static_cast<double>(N);
    return TraceCheck{lhs, rhs, std::abs(lhs - rhs)};
}

AliasingCheck aliasing_decomposition_check(const Symbol& sym, int N) {
    const int d = sym.d();
    if (2 * sym.lattice().max_abs() >= N)
        throw PreconditionError("aliasing check: need max lattice frequency < N/2");
    const QuantMatrix M = build_matrix(sym, N, QuantizationConvention::paper_matrix);
    const TorusCoeffTable table = torus_coeffs_of_symbol(sym, 2 * sym.lattice().max_abs() + 2);
    const QuantMatrix F1 = build_torus_matrix(table, N, 1.0);

    MultiIndexer idx(d, N);
    AliasingCheck out{0.0, 0.0, 0.0};
    std::vector<int> nu(d);
    std::vector<double> x(d);
    for (std::size_t fs = 0; fs < idx.size(); ++fs) {
        const auto s = idx.unflatten(fs);
        for (int a = 0; a < d; ++a) x[a] = static_cast<double>(s[a]) / N;
        for (std::size_t fj = 0; fj < idx.size(); ++fj) {
            const auto j = idx.unflatten(fj);
            // wrap-around terms p_{j-s+rN}(s/N), r != 0
            Cx wrap = 0.0;
            bool has_wrap = false;
            std::vector<int> r(d, -1);
            for (;;) {
                bool nonzero_r = false;
                for (int a = 0; a < d; ++a) {
                    nu[a] = j[a] - s[a] + r[a] * N;
                    nonzero_r = nonzero_r || r[a] != 0;
                }
                if (nonzero_r && sym.lattice().contains(nu)) {
                    wrap += sym.coeff(nu)(x);
                    has_wrap = true;
                }
                int a = d - 1;
                while (a >= 0) {
                    if (++r[a] <= 1) break;
                    r[a] = -1;
                    --a;
                }
                if (a < 0) break;
            }
            const double dev = std::abs(F1.data(fs, fj) - M.data(fs, fj) - wrap);
            out.max_dev = std::max(out.max_dev, dev);
            if (has_wrap)
                out.wrap_dev = std::max(out.wrap_dev, dev);
            else
                out.band_dev = std::max(out.band_dev, dev);
        }
    }
    return out;
}

// ---------------------------------------------------------------- exports --

void write_matrix_binary(const QuantMatrix& M, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("write_matrix_binary: cannot open " + path);
    const std::uint32_t dim = static_cast<std::uint32_t>(M.data.rows());
    unsigned char header[16] = {'T', 'W', 'Q', 'M', 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    header[4] = static_cast<unsigned char>(dim & 0xff);
    header[5] = static_cast<unsigned char>((dim >> 8) & 0xff);
    header[6] = static_cast<unsigned char>((dim >> 16) & 0xff);
    header[7] = static_cast<unsigned char>((dim >> 24) & 0xff);
    out.write(reinterpret_cast<const char*>(header), sizeof(header));
    for (Eigen::Index i = 0; i < M.data.rows(); ++i)
        for (Eigen::Index j = 0; j < M.data.cols(); ++j) {
            const double re = M.data(i, j).real();
            const double im = M.data(i, j).imag();
            out.write(reinterpret_cast<const char*>(&re), sizeof(double));
            out.write(reinterpret_cast<const char*>(&im), sizeof(double));
        }
}

MatrixXcd read_matrix_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("read_matrix_binary: cannot open " + path);
    unsigned char header[16];
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    if (in.gcount() != 16 || std::memcmp(header, "TWQM", 4) != 0)
        throw PreconditionError("read_matrix_binary: bad magic");
    const std::uint32_t dim = static_cast<std::uint32_t>(header[4]) |
                              (static_cast<std::uint32_t>(header[5]) << 8) |
                              (static_cast<std::uint32_t>(header[6]) << 16) |
                              (static_cast<std::uint32_t>(header[7]) << 24);
    MatrixXcd M(dim, dim);
    for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t j = 0; j < dim; ++j) {
            double re = 0.0, im = 0.0;
            in.read(reinterpret_cast<char*>(&re), sizeof(double));
            in.read(reinterpret_cast<char*>(&im), sizeof(double));
            M(i, j) = Cx(re, im);
        }
    if (!in) throw PreconditionError("read_matrix_binary: truncated file");
    return M;
}

void write_matrix_csv(const QuantMatrix& M, const std::string& path,
                      const std::vector<std::string>& header_comments, double threshold) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("write_matrix_csv: cannot open " + path);
    for (const auto& line : header_comments) out << "# " << line << "\n";
    out << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < M.data.rows(); ++i)
        for (Eigen::Index j = 0; j < M.data.cols(); ++j) {
            const Cx v = M.data(i, j);
            if (std::abs(v) <= threshold) continue;
            out << i + 1 << "," << j + 1 << "," << format_double(v.real()) << ","
                << format_double(v.imag()) << "\n";
        }
}

}  // namespace twistlab
