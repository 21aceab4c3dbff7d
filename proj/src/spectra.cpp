#include "drglab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "drglab/errors.hpp"
#include "drglab/kernels.hpp"

namespace drglab {

namespace {

Spectrum from_integer_counts(const std::map<long long, int>& counts) {
    Spectrum s;
    s.exact = true;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it)
        s.entries.push_back({static_cast<double>(it->first), it->second});
    return s;
}

} // namespace

Spectrum cayley_z2n_spectrum(int n, const ConnectionSet& s) {
    if (n < 1 || n > 12) throw ResourceError("Z_2^n families support 1 <= n <= 12");
    if (s.n != n) throw InputError("connection set dimension mismatch");

    std::vector<std::uint64_t> masks;
    masks.reserve(s.members.size());
    for (const Word& w : s.members) masks.push_back(w.bits);

    std::map<long long, int> counts;
    const std::uint32_t chars = std::uint32_t{1} << n;
    for (std::uint32_t a = 0; a < chars; ++a) {
        const std::int64_t lambda = kernels::signed_parity_sum(a, masks.data(), masks.size());
        ++counts[lambda];
    }
    return from_integer_counts(counts);
}

Spectrum qn2_spectrum_closed_form(int n) {
    if (n < 4) throw InputError("closed-form spectrum defined for n >= 4");
    if (n > 12) throw ResourceError("Z_2^n families support 1 <= n <= 12");

    const int top = (n + 1) / 2;
    Spectrum s;
    s.exact = true;
    for (int i = 0; i <= top; ++i) {
        const long long value = static_cast<long long>(n) * (n + 1) / 2 -
                                2LL * i * (n + 1) + 2LL * i * i;
        long long mult;
        if (i == 0) {
            mult = 1;
        } else if (n % 2 == 1 && i == top) {
            mult = binomial(n, i);
        } else {
            mult = binomial(n, i) + binomial(n, n + 1 - i);
        }
        s.entries.push_back({static_cast<double>(value), static_cast<int>(mult)});
    }
    // The listed values are strictly decreasing in i, so the entries are
    // already sorted.
    for (std::size_t i = 1; i < s.entries.size(); ++i)
        if (!(s.entries[i - 1].value > s.entries[i].value))
            throw IntegrityError("closed-form eigenvalues not strictly decreasing");
    return s;
}

Spectrum dense_spectrum(const Graph& g, double tol) {
    const int n = g.n_vertices();
    if (n > 512) throw ResourceError("dense eigensolver capped at 512 vertices");
    if (tol <= 0) throw InputError("tolerance must be positive");

    // Dense symmetric matrix, row-major.
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;

    auto off_norm2 = [&] {
        double sum = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double x = a[static_cast<std::size_t>(i) * n + j];
                sum += 2 * x * x;
            }
        return sum;
    };

    const double target = tol * tol;
    constexpr int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_norm2() < target) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1.0 / std::sqrt(t * t + 1);
                const double s = t * c;
                // Rotate rows p and q, then columns p and q (the matrix is
                // kept fully, so the column pass mirrors the row pass).
                kernels::rotate_pair(a.data() + static_cast<std::size_t>(p) * n,
                                     a.data() + static_cast<std::size_t>(q) * n, c, s,
                                     static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    double* xip = &a[static_cast<std::size_t>(i) * n + p];
                    double* xiq = &a[static_cast<std::size_t>(i) * n + q];
                    const double xi = *xip;
                    const double yi = *xiq;
                    *xip = c * xi - s * yi;
                    *xiq = s * xi + c * yi;
                }
            }
        }
    }
    if (sweep == max_sweeps && off_norm2() >= target)
        throw NumericError("Jacobi iteration did not converge within 100 sweeps");

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
    std::sort(eig.begin(), eig.end(), std::greater<>());

    const double gap = 10 * tol;
    Spectrum spec;
    spec.exact = false;
    std::size_t i = 0;
    while (i < eig.size()) {
        std::size_t j = i + 1;
        while (j < eig.size() && eig[j - 1] - eig[j] <= gap) ++j;
        double sum = 0;
        for (std::size_t k = i; k < j; ++k) sum += eig[k];
        spec.entries.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return spec;
}

bool line_graph_eigenvalue_test(const Spectrum& s, double tol) {
    if (s.entries.empty()) throw InputError("empty spectrum");
    return s.min_value() >= -2.0 - tol;
}

RootGraphVerdict regular_line_graph_root_search(long long n_vertices, long long valency) {
    std::string detail;

    // Case (i): a t-regular root on h vertices. Its line graph is
    // (2t-2)-regular with t*h/2 vertices.
    bool regular_feasible = false;
    if ((valency + 2) % 2 == 0) {
        const long long t = (valency + 2) / 2;
        if (t >= 1) {
            if ((2 * n_vertices) % t == 0) {
                const long long h = 2 * n_vertices / t;
                if (h >= t + 1) {
                    regular_feasible = true;
                    detail += "regular root feasible: t=" + std::to_string(t) +
                              ", h=" + std::to_string(h) + "; ";
                } else {
                    detail += "regular root t=" + std::to_string(t) + " forces h=" +
                              std::to_string(h) + " < t+1; ";
                }
            } else {
                detail += "regular root t=" + std::to_string(t) + " forces " +
                          std::to_string(n_vertices) + " = t*h/2 with non-integer h; ";
            }
        }
    }

    // Case (ii): a (c,d)-biregular bipartite root with parts A (degree c) and
    // B (degree d): c + d - 2 = valency and c|A| = d|B| = n_vertices, with
    // |A| >= d and |B| >= c.
    bool biregular_feasible = false;
    for (long long c = 1; c <= valency + 1; ++c) {
        const long long d = valency + 2 - c;
        if (d < c) break;
        if (n_vertices % c != 0 || n_vertices % d != 0) continue;
        const long long size_a = n_vertices / c;
        const long long size_b = n_vertices / d;
        if (size_a < d || size_b < c) {
            detail += "biregular {c,d}={" + std::to_string(c) + "," + std::to_string(d) +
                      "} forces part sizes " + std::to_string(size_a) + "," +
                      std::to_string(size_b) + " below the opposite degree; ";
            continue;
        }
        biregular_feasible = true;
        detail += "biregular root feasible: {c,d}={" + std::to_string(c) + "," +
                  std::to_string(d) + "}; ";
    }
    if (!biregular_feasible && detail.find("biregular") == std::string::npos)
        detail += "no biregular degree pair divides the vertex count; ";

    RootGraphVerdict v;
    v.detail = detail;
    v.verdict = (regular_feasible || biregular_feasible)
                    ? RootGraphVerdict::Kind::Inconclusive
                    : RootGraphVerdict::Kind::ExcludedByArithmetic;
    return v;
}

} // namespace drglab
