#pragma once

#include <string>
#include <vector>

#include "drglab/families.hpp"
#include "drglab/graph.hpp"

namespace drglab {

// Eigenvalues with multiplicities, strictly decreasing by value. Exact
// spectra hold (small) integers computed with integer arithmetic; the double
// representation is lossless for them.
struct Spectrum {
    struct Entry {
        double value = 0;
        int multiplicity = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;
    bool exact = false;

    double min_value() const { return entries.back().value; }
    double max_value() const { return entries.front().value; }
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Eigenvalue for character index a is the signed parity sum of a against the
// connection set; all arithmetic exact.
Spectrum cayley_z2n_spectrum(int n, const ConnectionSet& s);

// Closed form for the square of the hypercube, n >= 4.
Spectrum qn2_spectrum_closed_form(int n);

// Cyclic Jacobi rotations on the dense adjacency matrix until the
// off-diagonal Frobenius mass drops below tol; eigenvalues clustered into
// multiplicities with gap 10*tol. Caps at 512 vertices (ResourceError);
// NumericError if 100 sweeps do not converge.
Spectrum dense_spectrum(const Graph& g, double tol = 1e-10);

// False means definitively not a line graph (min eigenvalue < -2 - tol);
// true means this test alone cannot decide.
bool line_graph_eigenvalue_test(const Spectrum& s, double tol = 1e-9);

// Outcome of the arithmetic feasibility search for a root graph whose line
// graph would match (n_vertices, valency).
struct RootGraphVerdict {
    enum class Kind { ExcludedByEigenvalue, ExcludedByArithmetic, Inconclusive };
    Kind verdict = Kind::Inconclusive;
    std::string detail;
};

// Replays the case split for a connected regular graph assumed to be a line
// graph: a regular root, or a biregular bipartite root. ExcludedByArithmetic
// only when neither case admits integer parameters.
RootGraphVerdict regular_line_graph_root_search(long long n_vertices, long long valency);

} // namespace drglab
