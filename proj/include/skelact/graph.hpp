#pragma once

#include <vector>

#include "skelact/layout.hpp"

namespace skelact {

// Dense square matrix over joints, row-major. Entry (i, j) weights the
// contribution of source joint i into destination joint j.
struct JointMatrix {
    int size = 0;
    std::vector<double> a;

    JointMatrix() = default;
    explicit JointMatrix(int n) : size(n), a(static_cast<size_t>(n) * n, 0.0) {}

    double& at(int i, int j) { return a[static_cast<size_t>(i) * size + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * size + j]; }
};

// K partitioned, degree-normalized coefficient matrices for one layout.
struct AdjacencySet {
    std::vector<JointMatrix> parts;  // K matrices, V x V
    int num_joints = 0;
    std::string layout_name;
    bool normalized = false;

    int partition_count() const { return static_cast<int>(parts.size()); }
};

// Binary adjacency plus self-loops: (i,j) = 1 iff i == j or (i,j) is an edge.
JointMatrix build_adjacency(const JointLayout& layout);

// D^{-1/2} A D^{-1/2} with D = diag(row sums); zero-degree rows map to zero.
JointMatrix normalize_symmetric(const JointMatrix& a);

// Hop distance from `center` to every joint along the tree.
std::vector<int> hops_to_center(const JointLayout& layout);

// ST-GCN spatial-configuration partitioning, K = 3:
//   parts[0] self        (i == j)
//   parts[1] centripetal (edge entries whose destination is closer to center)
//   parts[2] centrifugal (edge entries whose destination is farther)
// Each partition is normalized as D_k^{-1/2} A_k D_k^{-1/2}, where D_k is the
// joint's degree in the partition's undirected support (the centripetal and
// centrifugal parts are mutual transposes; support degrees keep both sides
// of every edge nonzero and reduce to plain row sums on the self partition).
AdjacencySet partition_spatial(const JointLayout& layout);

}  // namespace skelact
