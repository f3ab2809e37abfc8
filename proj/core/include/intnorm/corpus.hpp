#pragma once

#include <span>

namespace intnorm {

/// Bundled example collection: the ribbon-graph file text plus the values
/// a run is expected to reproduce.
struct CorpusItem {
    const char* name;
    const char* text;
    int genus;
    int components;
    const char* expected_ball;  // polytope printout, or nullptr when genus 0
};

std::span<const CorpusItem> corpus();

}  // namespace intnorm
