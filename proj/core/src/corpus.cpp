#include "intnorm/corpus.hpp"

namespace intnorm {

namespace {

// Two simple curves on the torus crossing once.
constexpr const char* kT1 =
    "# torus: two curves through one double point\n"
    "vertices 1\n"
    "vertex 0: 0 1 2 3\n"
    "edges\n"
    "0 2\n"
    "1 3\n"
    "end\n";

// Figure-eight curve on the sphere.
constexpr const char* kT0 =
    "# sphere: figure-eight, one double point\n"
    "vertices 1\n"
    "vertex 0: 0 1 2 3\n"
    "edges\n"
    "0 1\n"
    "2 3\n"
    "end\n";

// Three curves on the torus; every smoothing of a crossing keeps the norm.
constexpr const char* kGenus1Trio =
    "# torus: three components, smoothable crossings\n"
    "vertices 3\n"
    "vertex 0: 0 1 2 3\n"
    "vertex 1: 4 5 6 7\n"
    "vertex 2: 8 9 10 11\n"
    "edges\n"
    "0 2\n"
    "1 4\n"
    "3 8\n"
    "5 11\n"
    "6 10\n"
    "7 9\n"
    "end\n";

// Four curves filling a genus-2 surface with some orientation carrying a
// nonzero total class.
constexpr const char* kGenus2Nontrivial =
    "# genus 2: four components, homologically nontrivial\n"
    "vertices 4\n"
    "vertex 0: 0 1 2 3\n"
    "vertex 1: 4 5 6 7\n"
    "vertex 2: 8 9 10 11\n"
    "vertex 3: 12 13 14 15\n"
    "edges\n"
    "0 2\n"
    "1 4\n"
    "3 8\n"
    "5 11\n"
    "6 10\n"
    "7 12\n"
    "9 14\n"
    "13 15\n"
    "end\n";

// One null-homologous curve filling a genus-2 surface: every orientation
// has zero class, so the norm is even.
constexpr const char* kGenus2Separating =
    "# genus 2: one null-homologous filling curve\n"
    "vertices 5\n"
    "vertex 0: 0 1 2 3\n"
    "vertex 1: 4 5 6 7\n"
    "vertex 2: 8 9 10 11\n"
    "vertex 3: 12 13 14 15\n"
    "vertex 4: 16 17 18 19\n"
    "edges\n"
    "0 18\n"
    "1 4\n"
    "2 12\n"
    "3 9\n"
    "5 11\n"
    "6 16\n"
    "7 15\n"
    "8 13\n"
    "10 19\n"
    "14 17\n"
    "end\n";

constexpr CorpusItem kItems[] = {
    {"T1", kT1, 1, 2,
     "dim 2\n"
     "v -1 -1\n"
     "v -1 1\n"
     "v 1 -1\n"
     "v 1 1\n"},
    {"T0", kT0, 0, 1, nullptr},
    {"genus1-trio", kGenus1Trio, 1, 3,
     "dim 2\n"
     "v -1 -1\n"
     "v -1 1\n"
     "v 1 -1\n"
     "v 1 1\n"},
    {"genus2-nontrivial", kGenus2Nontrivial, 2, 4,
     "dim 4\n"
     "v -2 -1 -1 -1\n"
     "v -2 -1 -1 1\n"
     "v -2 1 -1 -1\n"
     "v -2 1 -1 1\n"
     "v 0 -1 -1 -1\n"
     "v 0 -1 -1 1\n"
     "v 0 -1 1 -1\n"
     "v 0 -1 1 1\n"
     "v 0 1 -1 -1\n"
     "v 0 1 -1 1\n"
     "v 0 1 1 -1\n"
     "v 0 1 1 1\n"
     "v 2 -1 1 -1\n"
     "v 2 -1 1 1\n"
     "v 2 1 1 -1\n"
     "v 2 1 1 1\n"},
    {"genus2-separating", kGenus2Separating, 2, 1,
     "dim 4\n"
     "v -2 -2 0 -2\n"
     "v -2 -2 0 0\n"
     "v -2 -2 2 -2\n"
     "v -2 -2 2 0\n"
     "v -2 0 -2 0\n"
     "v -2 0 0 0\n"
     "v 0 -2 2 -2\n"
     "v 0 -2 2 0\n"
     "v 0 0 -2 0\n"
     "v 0 0 0 -2\n"
     "v 0 0 0 2\n"
     "v 0 0 2 0\n"
     "v 0 2 -2 0\n"
     "v 0 2 -2 2\n"
     "v 2 0 0 0\n"
     "v 2 0 2 0\n"
     "v 2 2 -2 0\n"
     "v 2 2 -2 2\n"
     "v 2 2 0 0\n"
     "v 2 2 0 2\n"},
};

}  // namespace

std::span<const CorpusItem> corpus() { return kItems; }

}  // namespace intnorm
