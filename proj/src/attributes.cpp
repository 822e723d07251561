#include "scnsim/attributes.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace scnsim {

namespace {

void check_vertex(const NetworkModel& model, int vertex) {
    if (vertex < 0 || vertex >= (int)model.vertices.size())
        throw AttributeError("unknown vertex index " + std::to_string(vertex));
}

}  // namespace

int connectivity(const NetworkModel& model, const FlowIndicator& flows, int vertex) {
    check_vertex(model, vertex);
    int count = 0;
    for (int e : model.in_edges(vertex))
        if (flows.active(e)) ++count;
    for (int e : model.out_edges(vertex))
        if (flows.active(e)) ++count;
    return count;
}

int depth(const NetworkModel& model, int vertex) {
    check_vertex(model, vertex);
    if (model.vertices[vertex].kind == VertexKind::Customer) return 0;
    // BFS over directed structural edges; depth is the max over reachable
    // customers of the geodesic distance.
    std::vector<int> dist(model.vertices.size(), -1);
    std::deque<int> queue{vertex};
    dist[vertex] = 0;
    int best = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (model.vertices[v].kind == VertexKind::Customer) best = std::max(best, dist[v]);
        for (int e : model.out_edges(v)) {
            int w = model.edges[e].to;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if (best < 0)
        throw AttributeError("depth undefined: no customer reachable from " + model.vertices[vertex].id);
    return best;
}

int redundancy(const NetworkModel& model, int vertex, const Capability& capability) {
    check_vertex(model, vertex);
    const auto& vx = model.vertices[vertex];
    switch (capability.op) {
        case Operation::Production: {
            if (!vx.produces(capability.product))
                throw AttributeError(vx.id + " does not hold production capability for product index " +
                                     std::to_string(capability.product));
            int count = 0;
            for (int v = 0; v < (int)model.vertices.size(); ++v)
                if (v != vertex && model.vertices[v].produces(capability.product)) ++count;
            return count;
        }
        case Operation::Inventory: {
            if (!vx.inventory_capabilities.count(capability.product))
                throw AttributeError(vx.id + " does not hold inventory capability");
            int count = 0;
            for (int v = 0; v < (int)model.vertices.size(); ++v)
                if (v != vertex && model.vertices[v].inventory_capabilities.count(capability.product)) ++count;
            return count;
        }
        case Operation::Transportation: {
            // Vertex agents do not hold transportation capabilities; count
            // the edge agents able to carry the product instead.
            int count = 0;
            for (const auto& e : model.edges)
                if (e.carries(capability.product)) ++count;
            return count;
        }
    }
    return 0;
}

int complexity(const NetworkModel& model, int vertex) {
    check_vertex(model, vertex);
    const auto& vx = model.vertices[vertex];
    if (vx.production_cost.empty())
        throw AttributeError(vx.id + " has no production capability; complexity undefined");
    std::set<int> downstream_finals;
    std::set<int> upstream_inputs;
    for (const auto& [k, cost] : vx.production_cost) {
        for (int f : model.finals_requiring(k)) downstream_finals.insert(f);
        if (model.products[k].tier == ProductTier::Final) downstream_finals.insert(k);
        for (int input : model.bom_inputs(k)) upstream_inputs.insert(input);
    }
    return (int)downstream_finals.size() + (int)upstream_inputs.size();
}

AttributeVector attribute_vector(const NetworkModel& model, const FlowIndicator& flows, int vertex) {
    check_vertex(model, vertex);
    AttributeVector out;
    out.connectivity = connectivity(model, flows, vertex);
    out.depth = depth(model, vertex);
    const auto& vx = model.vertices[vertex];
    for (const auto& [k, cost] : vx.production_cost)
        out.redundancy[k] = redundancy(model, vertex, Capability{Operation::Production, k});
    if (!vx.production_cost.empty()) {
        out.complexity = complexity(model, vertex);
        out.has_complexity = true;
    }
    return out;
}

}  // namespace scnsim
