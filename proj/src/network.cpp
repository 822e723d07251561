#include "scnsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <stdexcept>

namespace scnsim {

const char* to_string(ProductTier t) {
    switch (t) {
        case ProductTier::Final: return "final";
        case ProductTier::Component: return "component";
        case ProductTier::Part: return "part";
        case ProductTier::Material: return "material";
    }
    return "?";
}

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::Customer: return "customer";
        case VertexKind::Distributor: return "distributor";
        case VertexKind::Oem: return "oem";
        case VertexKind::TierSupplier: return "tier_supplier";
    }
    return "?";
}

const char* to_string(Operation o) {
    switch (o) {
        case Operation::Production: return "production";
        case Operation::Inventory: return "inventory";
        case Operation::Transportation: return "transportation";
    }
    return "?";
}

std::optional<ProductTier> tier_from_string(std::string_view s) {
    if (s == "final") return ProductTier::Final;
    if (s == "component") return ProductTier::Component;
    if (s == "part") return ProductTier::Part;
    if (s == "material") return ProductTier::Material;
    return std::nullopt;
}

std::optional<VertexKind> kind_from_string(std::string_view s) {
    if (s == "customer") return VertexKind::Customer;
    if (s == "distributor") return VertexKind::Distributor;
    if (s == "oem") return VertexKind::Oem;
    if (s == "tier_supplier") return VertexKind::TierSupplier;
    return std::nullopt;
}

std::optional<Operation> operation_from_string(std::string_view s) {
    if (s == "production") return Operation::Production;
    if (s == "inventory") return Operation::Inventory;
    if (s == "transportation") return Operation::Transportation;
    return std::nullopt;
}

double PenaltyWeights::unmet(int vertex, int product) const {
    auto it = unmet_override.find({vertex, product});
    return it == unmet_override.end() ? unmet_default : it->second;
}

double PenaltyWeights::new_edge(int edge) const {
    auto it = new_edge_override.find(edge);
    return it == new_edge_override.end() ? new_edge_default : it->second;
}

double PenaltyWeights::new_vertex(int vertex) const {
    auto it = new_vertex_override.find(vertex);
    return it == new_vertex_override.end() ? new_vertex_default : it->second;
}

void NetworkModel::rebuild_index() {
    product_ix_.clear();
    vertex_ix_.clear();
    edge_ix_.clear();
    edge_by_pair_.clear();
    for (int i = 0; i < (int)products.size(); ++i) product_ix_.emplace(products[i].id, i);
    for (int i = 0; i < (int)vertices.size(); ++i) vertex_ix_.emplace(vertices[i].id, i);
    out_edges_.assign(vertices.size(), {});
    in_edges_.assign(vertices.size(), {});
    for (int i = 0; i < (int)edges.size(); ++i) {
        edge_ix_.emplace(edges[i].id, i);
        edge_by_pair_.emplace(std::make_pair(edges[i].from, edges[i].to), i);
        if (edges[i].from >= 0 && edges[i].from < (int)vertices.size()) out_edges_[edges[i].from].push_back(i);
        if (edges[i].to >= 0 && edges[i].to < (int)vertices.size()) in_edges_[edges[i].to].push_back(i);
    }
}

int NetworkModel::product_index(std::string_view id) const {
    auto it = product_ix_.find(id);
    return it == product_ix_.end() ? -1 : it->second;
}

int NetworkModel::vertex_index(std::string_view id) const {
    auto it = vertex_ix_.find(id);
    return it == vertex_ix_.end() ? -1 : it->second;
}

int NetworkModel::edge_index(std::string_view id) const {
    auto it = edge_ix_.find(id);
    return it == edge_ix_.end() ? -1 : it->second;
}

int NetworkModel::find_edge(int from, int to) const {
    auto it = edge_by_pair_.find({from, to});
    return it == edge_by_pair_.end() ? -1 : it->second;
}

std::vector<int> NetworkModel::bom_inputs(int product) const {
    std::vector<int> out;
    for (auto it = bom.lower_bound({product, 0}); it != bom.end() && it->first.first == product; ++it)
        out.push_back(it->first.second);
    return out;
}

std::vector<int> NetworkModel::bom_users(int product) const {
    std::vector<int> out;
    for (const auto& [key, ratio] : bom)
        if (key.second == product) out.push_back(key.first);
    return out;
}

std::vector<int> NetworkModel::finals_requiring(int product) const {
    // Walk the BOM upward (toward outputs) from `product`; collect finals.
    std::set<int> seen{product};
    std::deque<int> queue{product};
    std::set<int> finals;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        for (int user : bom_users(k)) {
            if (!seen.insert(user).second) continue;
            if (products[user].tier == ProductTier::Final) finals.insert(user);
            queue.push_back(user);
        }
    }
    return {finals.begin(), finals.end()};
}

std::vector<int> NetworkModel::final_products() const {
    std::vector<int> out;
    for (int k = 0; k < (int)products.size(); ++k)
        if (products[k].tier == ProductTier::Final) out.push_back(k);
    return out;
}

std::vector<int> NetworkModel::customer_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < (int)vertices.size(); ++v)
        if (vertices[v].kind == VertexKind::Customer) out.push_back(v);
    return out;
}

std::vector<int> NetworkModel::producers_of(int product) const {
    std::vector<int> out;
    for (int v = 0; v < (int)vertices.size(); ++v)
        if (vertices[v].produces(product)) out.push_back(v);
    return out;
}

double NetworkModel::bom_ratio(int output, int input) const {
    auto it = bom.find({output, input});
    return it == bom.end() ? 0.0 : it->second;
}

namespace {

bool bom_has_cycle(const NetworkModel& m, std::vector<std::string>* witness) {
    enum { White, Grey, Black };
    std::vector<int> color(m.products.size(), White);
    std::function<bool(int)> dfs = [&](int k) -> bool {
        color[k] = Grey;
        for (int input : m.bom_inputs(k)) {
            if (color[input] == Grey) {
                if (witness) witness->push_back(m.products[k].id + "->" + m.products[input].id);
                return true;
            }
            if (color[input] == White && dfs(input)) return true;
        }
        color[k] = Black;
        return false;
    };
    for (int k = 0; k < (int)m.products.size(); ++k)
        if (color[k] == White && dfs(k)) return true;
    return false;
}

bool weakly_connected(const NetworkModel& m) {
    if (m.vertices.empty()) return true;
    std::vector<char> seen(m.vertices.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    size_t count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        auto visit = [&](int w) {
            if (w >= 0 && w < (int)m.vertices.size() && !seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
        };
        for (int e : m.out_edges(v)) visit(m.edges[e].to);
        for (int e : m.in_edges(v)) visit(m.edges[e].from);
    }
    return count == m.vertices.size();
}

}  // namespace

std::vector<Violation> validate(const NetworkModel& model) {
    std::vector<Violation> out;
    auto add = [&](std::string entity, std::string rule, std::string msg) {
        out.push_back({std::move(entity), std::move(rule), std::move(msg)});
    };

    // Product catalog
    std::set<std::string> product_ids;
    for (const auto& p : model.products) {
        if (p.id.empty()) add("product", "product.id", "empty product id");
        if (!product_ids.insert(p.id).second)
            add(p.id, "product.unique-id", "duplicate product id");
    }

    // BOM
    for (const auto& [key, ratio] : model.bom) {
        auto [output, input] = key;
        std::string name = (output >= 0 && output < (int)model.products.size() ? model.products[output].id : "?") +
                           "<-" +
                           (input >= 0 && input < (int)model.products.size() ? model.products[input].id : "?");
        if (output < 0 || output >= (int)model.products.size() || input < 0 || input >= (int)model.products.size())
            add(name, "bom.known-products", "bom entry references unknown product");
        else if (ratio <= 0.0)
            add(name, "bom.positive-ratio", "bom ratio must be > 0");
    }
    std::vector<std::string> cycle;
    if (bom_has_cycle(model, &cycle))
        add(cycle.empty() ? "bom" : cycle.front(), "bom.acyclic", "bill of materials contains a cycle");

    // Every non-final product reachable from some final product via BOM edges.
    {
        std::set<int> reachable;
        std::deque<int> queue;
        for (int k : model.final_products()) {
            reachable.insert(k);
            queue.push_back(k);
        }
        while (!queue.empty()) {
            int k = queue.front();
            queue.pop_front();
            for (int input : model.bom_inputs(k))
                if (reachable.insert(input).second) queue.push_back(input);
        }
        for (int k = 0; k < (int)model.products.size(); ++k)
            if (model.products[k].tier != ProductTier::Final && !reachable.count(k))
                add(model.products[k].id, "product.reachable-from-final",
                    "non-final product is not required by any final product");
    }

    // Vertices
    std::set<std::string> vertex_ids;
    for (int v = 0; v < (int)model.vertices.size(); ++v) {
        const auto& vx = model.vertices[v];
        if (!vertex_ids.insert(vx.id).second) add(vx.id, "vertex.unique-id", "duplicate vertex id");
        if (vx.production_capacity < 0.0)
            add(vx.id, "vertex.capacity-nonneg", "production capacity must be >= 0");
        if (!vx.production_cost.empty() && vx.production_capacity <= 0.0)
            add(vx.id, "vertex.capability-covered",
                "vertex has production capabilities but zero production capacity");
        for (const auto& [k, cost] : vx.production_cost) {
            if (k < 0 || k >= (int)model.products.size())
                add(vx.id, "vertex.known-products", "production capability references unknown product");
            else if (!(cost >= 0.0) || !std::isfinite(cost))
                add(vx.id, "vertex.finite-cost",
                    "production cost for " + model.products[k].id + " must be finite and >= 0");
        }
        for (const auto& [k, q] : vx.initial_inventory)
            if (q < 0.0) add(vx.id, "vertex.inventory-nonneg", "initial inventory must be >= 0");
        for (const auto& [k, d] : vx.demand) {
            if (d < 0.0) add(vx.id, "vertex.demand-nonneg", "demand must be >= 0");
            if (vx.kind != VertexKind::Customer && d > 0.0)
                add(vx.id, "vertex.customer-demand", "non-customer vertex has positive demand");
            if (k >= 0 && k < (int)model.products.size() && d > 0.0 &&
                model.products[k].tier != ProductTier::Final)
                add(vx.id, "vertex.final-demand",
                    "demanded product " + model.products[k].id + " is not a final product");
        }
    }

    // Edges
    std::set<std::string> edge_ids;
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : model.edges) {
        if (!edge_ids.insert(e.id).second) add(e.id, "edge.unique-id", "duplicate edge id");
        if (e.from < 0 || e.from >= (int)model.vertices.size() || e.to < 0 || e.to >= (int)model.vertices.size()) {
            add(e.id, "edge.known-vertices", "edge references unknown vertex");
            continue;
        }
        if (e.from == e.to) add(e.id, "edge.no-self-loop", "edge from == to");
        if (!pairs.insert({e.from, e.to}).second)
            add(e.id, "edge.unique-pair", "duplicate (from, to) pair");
        if (e.capacity < 0.0) add(e.id, "edge.capacity-nonneg", "edge capacity must be >= 0");
        for (const auto& [k, c] : e.unit_cost)
            if (k < 0 || k >= (int)model.products.size())
                add(e.id, "edge.known-products", "edge cost references unknown product");
        if (model.vertices[e.from].kind == VertexKind::Customer)
            add(e.id, "edge.customer-sink", "customers are sinks; edge leaves customer " + model.vertices[e.from].id);
    }

    // Policy
    if (!(model.overage.capacity_slack_fraction >= 0.0 && model.overage.capacity_slack_fraction < 1.0))
        add("policy", "policy.slack-range", "capacity slack fraction must be in [0, 1)");
    if (model.overage.cost_multiplier < 1.0)
        add("policy", "policy.multiplier-range", "overage cost multiplier must be >= 1");

    if (!model.vertices.empty() && !weakly_connected(model))
        add("network", "network.weakly-connected", "graph is not weakly connected");

    return out;
}

}  // namespace scnsim
