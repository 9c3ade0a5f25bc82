/**
 * Quivers with all-ones dimension vector: boundary matrices, cycles, cuts,
 * spanning trees and the ALE classification.
 *
 * Vertices are 0..V-1.  The boundary map sends the edge (i,j) to v_i - v_j,
 * written in the basis w_k = v_0 - v_k (k = 1..V-1), so its column has +1 in
 * row j-1 and -1 in row i-1 (rows for v_0 are dropped).  Edge order is the
 * ingestion order and fixes the variable indices.
 */

#ifndef HYPERTORIC_QUIVER_HPP
#define HYPERTORIC_QUIVER_HPP

#include <utility>

#include "hypertoric/gale.hpp"

namespace hypertoric {

struct Quiver
{
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;     // (tail, head)

    int n() const { return static_cast<int>(edges.size()); }
    int d() const { return vertices - 1; }
};

bool is_connected(const Quiver& q);

/// Throws Disconnected.  Loop edges give zero columns.
IntMatrix boundary_matrix(const Quiver& q);

/// Throws LoopPresent (a loop edge has a_e = 0, a coloop of the Gale dual).
void require_no_loops(const Quiver& q);

/// Fundamental cycles of the first spanning tree (greedy in edge order).
IntMatrix cycle_basis(const Quiver& q);

/// Spanning trees as sorted edge index sets, in lexicographic order.
std::vector<IndexSet> spanning_trees(const Quiver& q);

struct SpanningTreeCert
{
    IndexSet tree;
    IntVector lambda;       // theta = sum lambda_k * column(tree[k])
};

/// Throws NotASpanningTree.
SpanningTreeCert tree_coefficients(const Quiver& q, const IndexSet& tree, const IntVector& theta);

/// Every tree coefficient is nonzero for every spanning tree.
bool is_generic_quiver(const Quiver& q, const IntVector& theta);

/// Lawrence support of the tree: edge e if lambda_e > 0, n + e if lambda_e < 0.
IndexSet sigma_tau_theta(const Quiver& q, const IndexSet& tree, const IntVector& theta);

struct Cut
{
    IndexSet side;      // W, a nonempty set of vertices avoiding v_0
    IndexSet plus;      // edges leaving W
    IndexSet minus;     // edges entering W
    IndexSet edges() const;
};

std::vector<Cut> cuts(const Quiver& q);

/// Inclusion-minimal nonempty cuts.
std::vector<Cut> cocircuit_cuts(const Quiver& q);

/// Edge sets of the cocircuits (one square-free monomial each), sorted.
std::vector<IndexSet> cut_monomials(const Quiver& q);

/// sum_{D+} z_e w_e - sum_{D-} z_e w_e per cocircuit, as coefficient vectors.
std::vector<IntVector> cut_bilinear_relations(const Quiver& q);

struct AleReport
{
    bool product = false;
    std::vector<IndexSet> classes;      // parallel classes of rows of B
    std::vector<int> factors;           // class sizes, sorted
    bool unit_blocks = false;           // each class is +-1 times one primitive vector
};

/// Throws LoopPresent if some b_i = 0.
AleReport is_product_of_ALE(const GaleDualPair& pair);
AleReport is_product_of_ALE(const Quiver& q);

/// The n-cycle 0 -> 1 -> ... -> n-1 -> 0.
Quiver cycle_quiver(int n);

struct AleDegreeReport
{
    std::vector<std::pair<long long, long long>> collapsed;     // sorted (sum u, sum u')
    bool matches = false;
    bool swapped = false;       // matched only after exchanging the two sums
};

/// Lattice points of degree (1,..,1) on the Lawrence bounded complex of C_n.
AleDegreeReport ale_degree_generators_check(int n);

}   // namespace hypertoric

#endif
