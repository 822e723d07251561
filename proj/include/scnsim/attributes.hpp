#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "scnsim/network.hpp"

namespace scnsim {

// Marks which transport edges carry nonzero flow in the plan under
// evaluation. Attributes are always taken against the plan state at the
// moment the disruption occurs.
struct FlowIndicator {
    std::vector<char> edge_active;  // indexed by edge

    bool active(int edge) const {
        return edge >= 0 && edge < (int)edge_active.size() && edge_active[edge];
    }
};

struct AttributeVector {
    int connectivity = 0;           // C_i
    int depth = 0;                  // D_i
    std::map<int, int> redundancy;  // production product -> R_i(m)
    int complexity = 0;             // P_i
    bool has_complexity = false;    // false for vertices without production
};

struct AttributeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of flow-carrying edges in or out of the vertex.
int connectivity(const NetworkModel& model, const FlowIndicator& flows, int vertex);

// Max over customers of the shortest directed path length (in edges) from
// the vertex, over the structural edge set. Throws AttributeError when no
// customer is reachable.
int depth(const NetworkModel& model, int vertex);

// Count of other agents holding the same capability. For production
// capabilities these are vertices; for transportation capabilities, edges.
int redundancy(const NetworkModel& model, int vertex, const Capability& capability);

// Final product types transitively requiring anything the vertex produces,
// plus the direct input types of everything it produces. Throws for
// vertices without a production capability.
int complexity(const NetworkModel& model, int vertex);

AttributeVector attribute_vector(const NetworkModel& model, const FlowIndicator& flows, int vertex);

}  // namespace scnsim
