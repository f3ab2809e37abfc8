#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "intnorm/errors.hpp"
#include "intnorm/ribbon.hpp"

// Random connected 4-valent ribbon graph with natural rotations, built from
// a random perfect matching of the half-edges.
inline intnorm::RibbonGraph random_ribbon_graph(std::mt19937& rng, int n_vertices) {
    const int nh = 4 * n_vertices;
    std::vector<int> rot(nh);
    for (int v = 0; v < n_vertices; ++v)
        for (int k = 0; k < 4; ++k) rot[4 * v + k] = 4 * v + (k + 1) % 4;
    for (;;) {
        std::vector<int> hs(nh);
        for (int h = 0; h < nh; ++h) hs[h] = h;
        std::shuffle(hs.begin(), hs.end(), rng);
        std::vector<int> mate(nh);
        for (int i = 0; i < nh; i += 2) {
            mate[hs[i]] = hs[i + 1];
            mate[hs[i + 1]] = hs[i];
        }
        try {
            return intnorm::RibbonGraph::from_rotations(n_vertices, rot, mate);
        } catch (const intnorm::ValidationError&) {
            continue;  // disconnected draw
        }
    }
}
