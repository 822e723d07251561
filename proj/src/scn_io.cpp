#include "scnsim/scn_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "scnsim/text.hpp"

namespace scnsim {

namespace {

std::vector<int> sorted_by_id(size_t n, auto id_of) {
    std::vector<int> ix(n);
    std::iota(ix.begin(), ix.end(), 0);
    std::sort(ix.begin(), ix.end(), [&](int a, int b) { return id_of(a) < id_of(b); });
    return ix;
}

}  // namespace

void write_scn(std::ostream& os, const NetworkModel& m) {
    os << "scn/1\n";

    os << "section products\n";
    for (int k : sorted_by_id(m.products.size(), [&](int i) { return m.products[i].id; })) {
        os << "product " << m.products[k].id << " tier " << to_string(m.products[k].tier) << "\n";
    }

    os << "section bom\n";
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, double> ratios;
    for (const auto& [key, r] : m.bom) {
        auto named = std::make_pair(m.products[key.first].id, m.products[key.second].id);
        keys.push_back(named);
        ratios[named] = r;
    }
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys)
        os << "need " << key.first << " " << key.second << " " << fmt_qty(ratios[key]) << "\n";

    os << "section vertices\n";
    for (int v : sorted_by_id(m.vertices.size(), [&](int i) { return m.vertices[i].id; })) {
        const auto& vx = m.vertices[v];
        os << "vertex " << vx.id << " kind " << to_string(vx.kind) << " capacity "
           << fmt_qty(vx.production_capacity) << "\n";
        std::vector<std::pair<std::string, double>> rows;
        for (const auto& [k, cost] : vx.production_cost) rows.push_back({m.products[k].id, cost});
        std::sort(rows.begin(), rows.end());
        for (const auto& [name, cost] : rows)
            os << "cap " << vx.id << " production " << name << " cost " << fmt_qty(cost) << "\n";
        std::vector<std::string> inv;
        for (int k : vx.inventory_capabilities) inv.push_back(m.products[k].id);
        std::sort(inv.begin(), inv.end());
        for (const auto& name : inv) os << "cap " << vx.id << " inventory " << name << "\n";
        rows.clear();
        for (const auto& [k, q] : vx.initial_inventory) rows.push_back({m.products[k].id, q});
        std::sort(rows.begin(), rows.end());
        for (const auto& [name, q] : rows)
            os << "inventory " << vx.id << " " << name << " " << fmt_qty(q) << "\n";
        rows.clear();
        for (const auto& [k, d] : vx.demand) rows.push_back({m.products[k].id, d});
        std::sort(rows.begin(), rows.end());
        for (const auto& [name, d] : rows)
            os << "demand " << vx.id << " " << name << " " << fmt_qty(d) << "\n";
    }

    os << "section edges\n";
    for (int e : sorted_by_id(m.edges.size(), [&](int i) { return m.edges[i].id; })) {
        const auto& ed = m.edges[e];
        os << "edge " << ed.id << " from " << m.vertices[ed.from].id << " to " << m.vertices[ed.to].id
           << " capacity " << fmt_qty(ed.capacity) << "\n";
        std::vector<std::pair<std::string, double>> rows;
        for (const auto& [k, c] : ed.unit_cost) rows.push_back({m.products[k].id, c});
        std::sort(rows.begin(), rows.end());
        for (const auto& [name, c] : rows)
            os << "edgecost " << ed.id << " " << name << " " << fmt_qty(c) << "\n";
    }

    os << "section policy\n";
    os << "capacity_slack_fraction " << fmt_qty(m.overage.capacity_slack_fraction) << "\n";
    os << "overage_cost_multiplier " << fmt_qty(m.overage.cost_multiplier) << "\n";
    os << "penalty_unmet_default " << fmt_qty(m.penalties.unmet_default) << "\n";
    os << "penalty_new_edge_default " << fmt_qty(m.penalties.new_edge_default) << "\n";
    os << "penalty_new_vertex_default " << fmt_qty(m.penalties.new_vertex_default) << "\n";
    {
        std::vector<std::tuple<std::string, std::string, double>> rows;
        for (const auto& [key, w] : m.penalties.unmet_override)
            rows.push_back({m.vertices[key.first].id, m.products[key.second].id, w});
        std::sort(rows.begin(), rows.end());
        for (const auto& [v, k, w] : rows)
            os << "penalty_unmet " << v << " " << k << " " << fmt_qty(w) << "\n";
    }
    {
        std::vector<std::pair<std::string, double>> rows;
        for (const auto& [e, w] : m.penalties.new_edge_override) rows.push_back({m.edges[e].id, w});
        std::sort(rows.begin(), rows.end());
        for (const auto& [e, w] : rows) os << "penalty_new_edge " << e << " " << fmt_qty(w) << "\n";
        rows.clear();
        for (const auto& [v, w] : m.penalties.new_vertex_override) rows.push_back({m.vertices[v].id, w});
        std::sort(rows.begin(), rows.end());
        for (const auto& [v, w] : rows) os << "penalty_new_vertex " << v << " " << fmt_qty(w) << "\n";
    }
}

std::string to_scn_string(const NetworkModel& model) {
    std::ostringstream os;
    write_scn(os, model);
    return os.str();
}

void save_scn(const std::string& path, const NetworkModel& model) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_scn(os, model);
    if (!os) throw std::runtime_error("write failed: " + path);
}

NetworkModel read_scn(std::istream& is) {
    NetworkModel m;
    std::string line;
    if (!std::getline(is, line) || line != "scn/1")
        throw std::runtime_error("not an scn/1 file (bad header)");

    // Two passes are avoided by buffering lines that reference entities
    // defined later; the format as written never needs that, but keep the
    // parser order-tolerant within a section.
    int lineno = 1;
    auto need_product = [&](std::string_view id) {
        int k = m.product_index(id);
        if (k < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": unknown product '" + std::string(id) + "'");
        return k;
    };
    auto need_vertex = [&](std::string_view id) {
        int v = m.vertex_index(id);
        if (v < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": unknown vertex '" + std::string(id) + "'");
        return v;
    };
    auto need_edge = [&](std::string_view id) {
        int e = m.edge_index(id);
        if (e < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": unknown edge '" + std::string(id) + "'");
        return e;
    };

    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == '#') continue;
        const auto& kw = tok[0];
        auto expect = [&](size_t n) {
            if (tok.size() != n)
                throw std::runtime_error("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                         " tokens, got " + std::to_string(tok.size()));
        };
        if (kw == "section") {
            continue;
        } else if (kw == "product") {
            expect(4);
            auto tier = tier_from_string(tok[3]);
            if (tok[2] != "tier" || !tier)
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad product line");
            m.products.push_back({std::string(tok[1]), *tier});
            m.rebuild_index();
        } else if (kw == "need") {
            expect(4);
            int out = need_product(tok[1]);
            int in = need_product(tok[2]);
            m.bom[{out, in}] = parse_qty(tok[3], "bom ratio");
        } else if (kw == "vertex") {
            expect(6);
            auto kind = kind_from_string(tok[3]);
            if (tok[2] != "kind" || tok[4] != "capacity" || !kind)
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad vertex line");
            Vertex v;
            v.id = std::string(tok[1]);
            v.kind = *kind;
            v.production_capacity = parse_qty(tok[5], "vertex capacity");
            m.vertices.push_back(std::move(v));
            m.rebuild_index();
        } else if (kw == "cap") {
            int v = need_vertex(tok.size() > 1 ? tok[1] : "");
            if (tok.size() == 6 && tok[2] == "production" && tok[4] == "cost") {
                m.vertices[v].production_cost[need_product(tok[3])] = parse_qty(tok[5], "production cost");
            } else if (tok.size() == 4 && tok[2] == "inventory") {
                m.vertices[v].inventory_capabilities.insert(need_product(tok[3]));
            } else {
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad cap line");
            }
        } else if (kw == "inventory") {
            expect(4);
            m.vertices[need_vertex(tok[1])].initial_inventory[need_product(tok[2])] =
                parse_qty(tok[3], "inventory");
        } else if (kw == "demand") {
            expect(4);
            m.vertices[need_vertex(tok[1])].demand[need_product(tok[2])] = parse_qty(tok[3], "demand");
        } else if (kw == "edge") {
            expect(8);
            if (tok[2] != "from" || tok[4] != "to" || tok[6] != "capacity")
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad edge line");
            TransportEdge e;
            e.id = std::string(tok[1]);
            e.from = need_vertex(tok[3]);
            e.to = need_vertex(tok[5]);
            e.capacity = parse_qty(tok[7], "edge capacity");
            m.edges.push_back(std::move(e));
            m.rebuild_index();
        } else if (kw == "edgecost") {
            expect(4);
            m.edges[need_edge(tok[1])].unit_cost[need_product(tok[2])] = parse_qty(tok[3], "edge cost");
        } else if (kw == "capacity_slack_fraction") {
            expect(2);
            m.overage.capacity_slack_fraction = parse_qty(tok[1], kw.data());
        } else if (kw == "overage_cost_multiplier") {
            expect(2);
            m.overage.cost_multiplier = parse_qty(tok[1], kw.data());
        } else if (kw == "penalty_unmet_default") {
            expect(2);
            m.penalties.unmet_default = parse_qty(tok[1], kw.data());
        } else if (kw == "penalty_new_edge_default") {
            expect(2);
            m.penalties.new_edge_default = parse_qty(tok[1], kw.data());
        } else if (kw == "penalty_new_vertex_default") {
            expect(2);
            m.penalties.new_vertex_default = parse_qty(tok[1], kw.data());
        } else if (kw == "penalty_unmet") {
            expect(4);
            m.penalties.unmet_override[{need_vertex(tok[1]), need_product(tok[2])}] =
                parse_qty(tok[3], "penalty");
        } else if (kw == "penalty_new_edge") {
            expect(3);
            m.penalties.new_edge_override[need_edge(tok[1])] = parse_qty(tok[2], "penalty");
        } else if (kw == "penalty_new_vertex") {
            expect(3);
            m.penalties.new_vertex_override[need_vertex(tok[1])] = parse_qty(tok[2], "penalty");
        } else {
            throw std::runtime_error("line " + std::to_string(lineno) + ": unknown keyword '" +
                                     std::string(kw) + "'");
        }
    }
    m.rebuild_index();
    return m;
}

NetworkModel parse_scn_string(const std::string& text) {
    std::istringstream is(text);
    return read_scn(is);
}

NetworkModel load_scn(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_scn(is);
}

}  // namespace scnsim
