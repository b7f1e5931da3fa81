#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "leosim/orbital.hpp"
#include "leosim/traffic.hpp"

namespace leosim::routing {

// Next-hop decision. SelfLoop is a diagnostic action emitted only by
// adversarial test policies; the engine records the self-flow and drops
// the packet.
enum class NextHopAction : int {
    Up = 0,
    Down = 1,
    Left = 2,
    Right = 3,
    GroundDeliver = 4,
    SelfLoop = 5,
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Generic shortest paths (also used by the oracle-equivalence tests).

struct WeightedGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;  // directed (to, weight)

    explicit WeightedGraph(int nodes = 0) : n(nodes), adj(nodes) {}
    void add_edge(int from, int to, double w) { adj[from].push_back({to, w}); }
};

// Binary-heap Dijkstra. parent[v] is the predecessor on a shortest path
// from src (ties resolved toward the lowest predecessor index).
std::vector<double> dijkstra_distances(const WeightedGraph& g, int src,
                                       std::vector<int>* parent = nullptr);

// ---------------------------------------------------------------------------
// Routing tables.

// Next hop per (satellite, destination gateway); -1 marks an unreachable
// pair. Entries are sized for dissemination accounting.
struct RoutingTable {
    double epoch_s = 0.0;
    int num_sats = 0;
    int num_gateways = 0;
    std::vector<int8_t> next_hop;  // sat * num_gateways + gw -> direction or -1
    static constexpr int kEntryBits = 32;  // destination id + action, padded

    int8_t at(int sat, int gw) const { return next_hop[sat * num_gateways + gw]; }
    double size_bits(int sat) const;
    // One entry per line: sat, dst, action, epoch.
    void dump(std::ostream& os) const;
};

// Everything a policy may consult at one instant. Rates and distances are
// indexed [sat][direction]; absent links carry rate 0 and infinite distance.
struct SnapshotView {
    const orbital::Constellation* constellation = nullptr;
    const orbital::ConstellationSnapshot* snapshot = nullptr;
    const std::vector<orbital::NeighborSet>* effective_adjacency = nullptr;
    const std::vector<std::array<double, 4>>* isl_distance_km = nullptr;
    const std::vector<std::array<double, 4>>* isl_rate_bps = nullptr;
    const std::vector<orbital::Gateway>* gateways = nullptr;
    std::vector<double> uplink_rate_bps;  // per gateway; 0 when unattached
    double packet_bits = 64000.0;
    double now_s = 0.0;
};

// Per-destination-gateway tables over the effective adjacency. Weight of a
// directed link is propagation plus, optionally, per-packet transmission
// delay. Ties break to the lowest neighbor flat index.
RoutingTable dijkstra_tables(const SnapshotView& view,
                             bool include_transmission = true);

// Fraction in [0,1] of (satellite, destination) entries whose next hop
// differs; keys present in only one table count as changed.
double path_change_fraction(const RoutingTable& prev, const RoutingTable& next);

// ---------------------------------------------------------------------------
// Policy interface.

struct DecisionContext {
    int sat = -1;
    const traffic::Packet* packet = nullptr;
    int dst_gateway = -1;
    Vec3 dst_gateway_pos_km;
    int dst_attach_sat = -1;  // -1 during a coverage gap
    const SnapshotView* view = nullptr;
    std::array<bool, 4> valid{};           // direction exists right now
    std::array<double, 4> occupancy{};     // queue toward each neighbor; 1 if absent
    std::array<double, 4> link_resilience{};  // 0 if absent or failed
    double now_s = 0.0;
};

class RoutingPolicy {
public:
    virtual ~RoutingPolicy() = default;
    virtual std::string name() const = 0;
    // Chooses the outgoing direction for one packet at one satellite.
    // GroundDeliver is never requested here; the engine delivers
    // automatically at the destination's attachment satellite.
    virtual NextHopAction decide(const DecisionContext& ctx) = 0;
    // Called after every snapshot refresh, before any decision at that time.
    virtual void on_snapshot(const SnapshotView& view) {}

    // Decision-cost ledger, filled by the engine / the policy.
    uint64_t decisions = 0;
    double modeled_dissemination_s = 0.0;  // Dijkstra only
    double recompute_wallclock_s = 0.0;    // wall clock, reported out of band
    uint64_t stale_route_events = 0;
};

// Dijkstra baseline: recomputes tables every recalc_interval seconds from
// the then-current snapshot, charges modeled dissemination per recompute,
// and falls back to the valid neighbor closest (great-circle) to the
// destination when a table entry is missing or stale.
class DijkstraPolicy : public RoutingPolicy {
public:
    DijkstraPolicy(double recalc_interval_s, bool include_transmission = true,
                   int dissemination_gateway = 0);

    std::string name() const override { return "dijkstra"; }
    NextHopAction decide(const DecisionContext& ctx) override;
    void on_snapshot(const SnapshotView& view) override;

    const RoutingTable& table() const { return table_; }
    const std::vector<std::pair<double, double>>& path_change_series() const {
        return path_changes_;  // (epoch_s, fraction)
    }
    uint64_t recompute_count() const { return recomputes_; }

private:
    double recalc_interval_s_;
    bool include_transmission_;
    int dissemination_gateway_;
    bool have_table_ = false;
    double last_recalc_s_ = 0.0;
    RoutingTable table_;
    std::vector<std::pair<double, double>> path_changes_;
    uint64_t recomputes_ = 0;
};

// Dissemination cost of shipping per-satellite tables from one gateway up
// through the constellation: per satellite, table bits over the gateway
// uplink rate plus propagation along a minimum-hop path to that satellite.
double dissemination_cost_s(const RoutingTable& table, const SnapshotView& view,
                            int dissemination_gateway);

// ---------------------------------------------------------------------------
// Flow measurement and the constraint validator.

struct FlowAssignment {
    double window_s = 0.0;
    // directed link (from<<32|to) -> bits offered to the link queue
    std::unordered_map<uint64_t, double> link_bits;
    // per-satellite conservation counters, all in bits
    std::vector<double> in_bits, out_bits, resident_bits, dropped_bits;

    static uint64_t key(int from, int to) {
        return (uint64_t(uint32_t(from)) << 32) | uint32_t(to);
    }
    void add_link_bits(int from, int to, double bits) {
        link_bits[key(from, to)] += bits;
    }
};

struct ConstraintResult {
    std::string name;
    bool pass = true;
    double worst_margin = 0.0;  // negative margin on failure
    std::string detail;         // worst offender
};

struct ConstraintReport {
    std::vector<ConstraintResult> results;
    bool all_pass() const;
    const ConstraintResult& get(const std::string& name) const;
};

// C1: offered flow per ISL within link rate. C2: per-satellite conservation
// (in = out + resident + dropped). C3: no self-flows. C5: every measured
// path outage within the configured bound.
ConstraintReport validate_constraints(const FlowAssignment& flows,
                                      const SnapshotView& view,
                                      const std::vector<double>& path_outages,
                                      double p_out_threshold);

}  // namespace leosim::routing
