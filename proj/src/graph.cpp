#include "skelact/graph.hpp"

#include <cmath>
#include <queue>

#include "skelact/common.hpp"

namespace skelact {

JointMatrix build_adjacency(const JointLayout& layout) {
    int v = layout.num_joints;
    JointMatrix m(v);
    for (int i = 0; i < v; ++i) m.at(i, i) = 1.0;
    for (auto [child, parent] : layout.edges) {
        m.at(child, parent) = 1.0;
        m.at(parent, child) = 1.0;
    }
    return m;
}

JointMatrix normalize_symmetric(const JointMatrix& a) {
    int v = a.size;
    std::vector<double> inv_sqrt(v, 0.0);
    for (int i = 0; i < v; ++i) {
        double deg = 0.0;
        for (int j = 0; j < v; ++j) deg += a.at(i, j);
        if (deg > 0.0) inv_sqrt[i] = 1.0 / std::sqrt(deg);
    }
    JointMatrix out(v);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            out.at(i, j) = inv_sqrt[i] * a.at(i, j) * inv_sqrt[j];
        }
    }
    return out;
}

std::vector<int> hops_to_center(const JointLayout& layout) {
    int v = layout.num_joints;
    std::vector<std::vector<int>> nbr(v);
    for (auto [c, p] : layout.edges) {
        nbr[c].push_back(p);
        nbr[p].push_back(c);
    }
    std::vector<int> dist(v, -1);
    std::queue<int> q;
    dist[layout.center] = 0;
    q.push(layout.center);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (int n : nbr[cur]) {
            if (dist[n] < 0) {
                dist[n] = dist[cur] + 1;
                q.push(n);
            }
        }
    }
    return dist;
}

namespace {

// Normalizes one partition with degrees taken from its undirected support.
JointMatrix normalize_partition(const JointMatrix& part) {
    int v = part.size;
    std::vector<double> inv_sqrt(v, 0.0);
    for (int i = 0; i < v; ++i) {
        double deg = 0.0;
        for (int j = 0; j < v; ++j) {
            if (part.at(i, j) != 0.0 || part.at(j, i) != 0.0) deg += 1.0;
        }
        if (deg > 0.0) inv_sqrt[i] = 1.0 / std::sqrt(deg);
    }
    JointMatrix out(v);
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            out.at(i, j) = inv_sqrt[i] * part.at(i, j) * inv_sqrt[j];
        }
    }
    return out;
}

}  // namespace

AdjacencySet partition_spatial(const JointLayout& layout) {
    if (layout.center < 0 || layout.center >= layout.num_joints) {
        throw SpecError("layout center joint out of range");
    }
    int v = layout.num_joints;
    auto dist = hops_to_center(layout);

    JointMatrix self(v), centripetal(v), centrifugal(v);
    for (int i = 0; i < v; ++i) self.at(i, i) = 1.0;
    for (auto [c, p] : layout.edges) {
        // Entry (src, dst): dst closer to center => centripetal.
        auto classify = [&](int src, int dst) {
            if (dist[dst] < dist[src]) {
                centripetal.at(src, dst) = 1.0;
            } else {
                centrifugal.at(src, dst) = 1.0;
            }
        };
        classify(c, p);
        classify(p, c);
    }

    AdjacencySet set;
    set.num_joints = v;
    set.layout_name = layout.name;
    set.parts.push_back(normalize_partition(self));
    set.parts.push_back(normalize_partition(centripetal));
    set.parts.push_back(normalize_partition(centrifugal));
    set.normalized = true;
    return set;
}

}  // namespace skelact
