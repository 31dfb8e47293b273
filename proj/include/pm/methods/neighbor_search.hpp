#pragma once

namespace pm {

// Backend for cut-off bounded neighborhood hooks. The cell list is an
// optional accelerator; both backends return identical index tuples.
enum class NeighborSearch { brute_force, cell_list };

} // namespace pm
