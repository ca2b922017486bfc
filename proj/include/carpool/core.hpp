#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace carpool {

using VertexId = int;

// Arc weights are fixed-point micro-units (decimal input scaled by 1e6), so all
// solver arithmetic and weight comparisons are exact.
using Weight = std::int64_t;
inline constexpr Weight kWeightScale = 1'000'000;

// Largest |weight| allowed per arc so that a sum over `arc_count` arcs stays
// well inside the exact integer range.
inline Weight max_abs_weight(std::size_t arc_count) {
  return (std::int64_t{1} << 53) / static_cast<std::int64_t>(std::max<std::size_t>(1, arc_count));
}

enum class ErrorKind {
  bad_length,
  self_loop,
  duplicate_arc,
  negative_capacity,
  weight_out_of_range,
  index_out_of_range,
  parse,
  malformed_network,
  limit_exceeded,
  cycle_detected,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, int line = -1)
      : std::runtime_error(msg), kind_(kind), line_(line) {}

  ErrorKind kind() const { return kind_; }
  // 1-based input line for parse errors, -1 elsewhere.
  int line() const { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

namespace detail {
inline void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::internal, what);
}
}  // namespace detail

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// A problem input: directed graph with per-vertex capacities and per-arc weights.
// Vertices are dense zero-based ids; external labels are handled by the io layer.
struct Instance {
  VertexId n = 0;
  std::vector<std::int64_t> capacities;
  std::vector<Arc> arcs;

  std::int64_t capacity(VertexId v) const { return capacities[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Role : std::uint8_t { passenger, driver };

// A role per vertex plus the matched arcs (sorted indices into Instance::arcs).
// Feasible when every matched arc runs passenger -> driver, no driver exceeds
// its capacity and no passenger rides more than once.
struct Matching {
  std::vector<Role> roles;
  std::vector<std::size_t> arcs;
};

// The four vertex classes induced by a matching, defined by degrees within the
// matched arc set. A vertex with zero matched degree is free even if its role
// says driver and its capacity is zero.
struct RoleSets {
  std::vector<VertexId> passengers;  // matched out-degree 1
  std::vector<VertexId> drivers;     // matched in-degree > 0
  std::vector<VertexId> saturated;   // drivers with in-degree == capacity
  std::vector<VertexId> free;        // matched degree 0
};

enum class MatchingViolationKind {
  role_mismatch,        // matched arc whose tail is not a passenger or head not a driver
  capacity_exceeded,    // driver with matched in-degree > capacity
  out_degree_exceeded,  // passenger with matched out-degree > 1
};

inline constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);

struct MatchingViolation {
  MatchingViolationKind kind;
  VertexId vertex = -1;
  std::size_t arc = kNoArc;

  friend bool operator==(const MatchingViolation&, const MatchingViolation&) = default;
};

inline std::string describe(const MatchingViolation& v) {
  switch (v.kind) {
    case MatchingViolationKind::role_mismatch:
      return "role mismatch on matched arc " + std::to_string(v.arc) + " at vertex " +
             std::to_string(v.vertex);
    case MatchingViolationKind::capacity_exceeded:
      return "capacity exceeded at driver " + std::to_string(v.vertex);
    case MatchingViolationKind::out_degree_exceeded:
      return "out-degree exceeded at passenger " + std::to_string(v.vertex);
  }
  return "unknown violation";
}

// Validates and assembles an Instance.
inline Instance make_instance(VertexId n, std::vector<std::int64_t> capacities,
                              std::vector<Arc> arcs) {
  if (n < 0) throw Error(ErrorKind::bad_length, "vertex count must be non-negative");
  if (capacities.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::bad_length, "capacity list length does not match vertex count");
  for (VertexId v = 0; v < n; ++v) {
    if (capacities[static_cast<std::size_t>(v)] < 0)
      throw Error(ErrorKind::negative_capacity, "negative capacity at vertex " + std::to_string(v));
  }
  const Weight bound = max_abs_weight(arcs.size());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw Error(ErrorKind::index_out_of_range, "arc endpoint out of range");
    if (a.tail == a.head)
      throw Error(ErrorKind::self_loop, "self-loop at vertex " + std::to_string(a.tail));
    if (!seen.emplace(a.tail, a.head).second)
      throw Error(ErrorKind::duplicate_arc, "duplicate arc (" + std::to_string(a.tail) + ", " +
                                                std::to_string(a.head) + ")");
    if (a.weight > bound || a.weight < -bound)
      throw Error(ErrorKind::weight_out_of_range, "arc weight out of range");
  }
  return Instance{n, std::move(capacities), std::move(arcs)};
}

struct MatchedDegrees {
  std::vector<std::int64_t> in;
  std::vector<std::int64_t> out;
};

// Degrees within an arc subset, counted with multiplicity.
inline MatchedDegrees matched_degrees(const Instance& inst, std::span<const std::size_t> arcs) {
  MatchedDegrees d;
  d.in.assign(static_cast<std::size_t>(inst.n), 0);
  d.out.assign(static_cast<std::size_t>(inst.n), 0);
  for (std::size_t idx : arcs) {
    if (idx >= inst.arcs.size())
      throw Error(ErrorKind::index_out_of_range, "matched arc index out of range");
    const Arc& a = inst.arcs[idx];
    ++d.out[static_cast<std::size_t>(a.tail)];
    ++d.in[static_cast<std::size_t>(a.head)];
  }
  return d;
}

// Reports every violated feasibility constraint; an empty result means feasible.
inline std::vector<MatchingViolation> validate_matching(const Instance& inst, const Matching& m) {
  if (m.roles.size() != static_cast<std::size_t>(inst.n))
    throw Error(ErrorKind::index_out_of_range, "role list length does not match vertex count");
  std::vector<MatchingViolation> out;
  for (std::size_t idx : m.arcs) {
    if (idx >= inst.arcs.size())
      throw Error(ErrorKind::index_out_of_range, "matched arc index out of range");
    const Arc& a = inst.arcs[idx];
    if (m.roles[static_cast<std::size_t>(a.tail)] != Role::passenger)
      out.push_back({MatchingViolationKind::role_mismatch, a.tail, idx});
    if (m.roles[static_cast<std::size_t>(a.head)] != Role::driver)
      out.push_back({MatchingViolationKind::role_mismatch, a.head, idx});
  }
  const MatchedDegrees deg = matched_degrees(inst, m.arcs);
  for (VertexId v = 0; v < inst.n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (m.roles[i] == Role::driver && deg.in[i] > inst.capacity(v))
      out.push_back({MatchingViolationKind::capacity_exceeded, v});
    if (m.roles[i] == Role::passenger && deg.out[i] > 1)
      out.push_back({MatchingViolationKind::out_degree_exceeded, v});
  }
  return out;
}

inline Weight arc_set_weight(const Instance& inst, std::span<const std::size_t> arcs) {
  __int128 sum = 0;
  for (std::size_t idx : arcs) {
    if (idx >= inst.arcs.size())
      throw Error(ErrorKind::index_out_of_range, "arc index out of range");
    sum += inst.arcs[idx].weight;
  }
  detail::require(sum <= INT64_MAX && sum >= INT64_MIN, "weight sum overflow");
  return static_cast<Weight>(sum);
}

inline Weight matching_weight(const Instance& inst, const Matching& m) {
  return arc_set_weight(inst, m.arcs);
}

inline RoleSets classify(const Instance& inst, const Matching& m) {
  const MatchedDegrees deg = matched_degrees(inst, m.arcs);
  RoleSets sets;
  for (VertexId v = 0; v < inst.n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (deg.out[i] > 0) sets.passengers.push_back(v);
    if (deg.in[i] > 0) {
      sets.drivers.push_back(v);
      if (deg.in[i] == inst.capacity(v)) sets.saturated.push_back(v);
    }
    if (deg.in[i] == 0 && deg.out[i] == 0) sets.free.push_back(v);
  }
  return sets;
}

// Drops all strictly negative arcs; the vertex set is unchanged. A maximum
// matching or super-matching never uses such arcs.
inline Instance prune_negative_arcs(const Instance& inst) {
  Instance out;
  out.n = inst.n;
  out.capacities = inst.capacities;
  for (const Arc& a : inst.arcs) {
    if (a.weight >= 0) out.arcs.push_back(a);
  }
  return out;
}

// Role vector implied by an arc set: heads drive, everyone else rides.
inline std::vector<Role> roles_from_arcs(const Instance& inst, std::span<const std::size_t> arcs) {
  std::vector<Role> roles(static_cast<std::size_t>(inst.n), Role::passenger);
  for (std::size_t idx : arcs) roles[static_cast<std::size_t>(inst.arcs[idx].head)] = Role::driver;
  return roles;
}

}  // namespace carpool
