#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scnsim {

enum class ProductTier { Final, Component, Part, Material };
enum class VertexKind { Customer, Distributor, Oem, TierSupplier };
enum class Operation { Production, Inventory, Transportation };

const char* to_string(ProductTier t);
const char* to_string(VertexKind k);
const char* to_string(Operation o);
std::optional<ProductTier> tier_from_string(std::string_view s);
std::optional<VertexKind> kind_from_string(std::string_view s);
std::optional<Operation> operation_from_string(std::string_view s);

struct Product {
    std::string id;
    ProductTier tier = ProductTier::Material;
};

// A capability is (operation, product). Production capabilities carry a unit
// cost on the vertex; transportation capabilities live on edges.
struct Capability {
    Operation op = Operation::Production;
    int product = -1;
    friend auto operator<=>(const Capability&, const Capability&) = default;
};

struct Vertex {
    std::string id;
    VertexKind kind = VertexKind::TierSupplier;
    double production_capacity = 0.0;            // p_bar, summed over products
    std::map<int, double> production_cost;       // product -> e_ik; key set == production capabilities
    std::set<int> inventory_capabilities;        // products the vertex may hold
    std::map<int, double> initial_inventory;     // product -> I0
    std::map<int, double> demand;                // product -> d (customers only)

    bool produces(int product) const { return production_cost.count(product) > 0; }
};

struct TransportEdge {
    std::string id;
    int from = -1;
    int to = -1;
    double capacity = 0.0;                       // q_ij, summed over products
    std::map<int, double> unit_cost;             // product -> c_ijk; key set == carryable products

    bool carries(int product) const { return unit_cost.count(product) > 0; }
};

struct OveragePolicy {
    double capacity_slack_fraction = 0.3;        // overage room as a fraction of nominal
    double cost_multiplier = 1.5;                // unit-cost multiplier on overage flow/production
};

struct PenaltyWeights {
    double unmet_default = 0.0;                  // rho_d
    double new_edge_default = 0.0;               // rho_E
    double new_vertex_default = 0.0;             // rho_V
    std::map<std::pair<int, int>, double> unmet_override;   // (vertex, product)
    std::map<int, double> new_edge_override;                // edge
    std::map<int, double> new_vertex_override;              // vertex

    double unmet(int vertex, int product) const;
    double new_edge(int edge) const;
    double new_vertex(int vertex) const;
};

struct Violation {
    std::string entity;
    std::string rule;
    std::string message;
};

// Immutable-after-build supply chain model. Entities are stored in canonical
// (id-sorted) order and referenced by dense index everywhere else.
class NetworkModel {
public:
    std::vector<Product> products;
    std::vector<Vertex> vertices;
    std::vector<TransportEdge> edges;
    std::map<std::pair<int, int>, double> bom;   // (output, input) -> r_kk' > 0
    OveragePolicy overage;
    PenaltyWeights penalties;

    // Rebuilds lookup tables; call after mutating the entity lists.
    void rebuild_index();

    int product_index(std::string_view id) const;
    int vertex_index(std::string_view id) const;
    int edge_index(std::string_view id) const;
    int find_edge(int from, int to) const;       // -1 if absent

    const std::vector<int>& out_edges(int vertex) const { return out_edges_[vertex]; }
    const std::vector<int>& in_edges(int vertex) const { return in_edges_[vertex]; }

    // Z(k): direct BOM inputs of product k.
    std::vector<int> bom_inputs(int product) const;
    // Products that directly consume k.
    std::vector<int> bom_users(int product) const;
    // Final products that (transitively) require k.
    std::vector<int> finals_requiring(int product) const;
    std::vector<int> final_products() const;
    std::vector<int> customer_vertices() const;

    // Vertices holding the production capability for `product`.
    std::vector<int> producers_of(int product) const;

    double bom_ratio(int output, int input) const;

private:
    std::map<std::string, int, std::less<>> product_ix_;
    std::map<std::string, int, std::less<>> vertex_ix_;
    std::map<std::string, int, std::less<>> edge_ix_;
    std::map<std::pair<int, int>, int> edge_by_pair_;
    std::vector<std::vector<int>> out_edges_, in_edges_;
};

// Checks every structural invariant; an empty result means the model is
// well formed. Violations are data, not errors.
std::vector<Violation> validate(const NetworkModel& model);

}  // namespace scnsim
