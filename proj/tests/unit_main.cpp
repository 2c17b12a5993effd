#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "phg/oracle.hpp"

namespace testutil {

phg::PartiteHypergraph complete_unit(int r, const std::vector<std::size_t>& sizes) {
    return phg::make_unit_hypergraph(r, sizes, phg::edge_universe(r, sizes));
}

phg::PartiteHypergraph path_three_classes() {
    return phg::make_unit_hypergraph(2, {1, 1, 1},
                                     {edge({{0, 0}, {1, 0}}), edge({{1, 0}, {2, 0}})});
}

} // namespace testutil
