#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zq/closure.hpp"

namespace zq {

// Oracle threshold parameter: a nonnegative integer, or infinity for the
// classic game (the oracle can never be invoked).
class QValue {
public:
    static QValue finite(int q) {
        if (q < 0) throw ContractViolation("QValue: q must be nonnegative");
        return QValue(q);
    }
    static QValue infinity() { return QValue(-1); }
    static QValue parse(const std::string& s);

    bool is_infinite() const { return q_ < 0; }
    int value() const {
        if (is_infinite()) throw ContractViolation("QValue: infinite has no finite value");
        return q_;
    }
    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(q_); }
    bool operator==(const QValue&) const = default;

private:
    explicit QValue(int q) : q_(q) {}
    int q_;
};

struct SolverConfig {
    QValue q = QValue::infinity();
    std::size_t state_limit = 2'000'000;  // max memo entries
    int announcement_limit = 16;          // max unfilled-component count enumerated for oracle moves
    bool single_step_forces = false;      // enumerate forces one at a time instead of jumping to closure
    bool decompose = true;                // value of a disconnected graph = sum over components
};

struct Move {
    enum class Kind { none, spend, force, announce };
    Kind kind = Kind::none;
    int vertex = -1;                  // spend target / force target
    int source = -1;                  // force source
    std::vector<VertexSet> announced; // announce: the handed components
    std::string to_string() const;
};

// Compact per-state record of the best move, reconstructible into a Move
// given the state it was recorded at.
struct MoveTag {
    Move::Kind kind = Move::Kind::none;
    int a = -1;                 // spend/force target
    int b = -1;                 // force source
    std::uint32_t mask = 0;     // announce: bitmask over that state's component list
};

struct MemoEntry {
    int value = 0;
    MoveTag best;
};

// Filled-set keyed cache of exact game values.
struct MemoTable {
    std::unordered_map<VertexSet, MemoEntry, VertexSetHash> entries;
    // Verifies F ⊆ F' ⟹ value(F) ≥ value(F') over all stored pairs.
    bool value_monotone() const;
};

struct GameResult {
    int value = 0;
    Move first_move;
    std::size_t states = 0;  // memo entries across all component solves
};

// Exact Z_q(G) by memoized adversarial game search. Disconnected graphs are
// summed over components unless cfg.decompose is false.
GameResult zq_number(const Graph& g, const SolverConfig& cfg);
GameResult zq_number(const Graph& g, QValue q);

// Whole-graph solve that surrenders its memo for inspection.
GameResult zq_number_with_memo(const Graph& g, const SolverConfig& cfg, MemoTable& memo_out);

// Game value from an arbitrary mid-game state (whole graph, no decomposition).
int zq_value_from(const Graph& g, const VertexSet& filled, const SolverConfig& cfg);

// Classic Z(G): least |S| with closure(g, S) = V, by subset search in
// increasing size. Kept independent of the game solver so the two routes
// cross-check each other.
int z_number(const Graph& g, int size_cap = 24);

// Positive semidefinite forcing number: least |S| whose psd_closure fills V.
int z0_number(const Graph& g, int size_cap = 24);

// Static variant: least |S| such that after spending all of S up front, the
// player wins with free moves only (forces and admissible announcements).
int zq_static(const Graph& g, int q, const SolverConfig& cfg = {});

// Lemma-style stalling oracle: given the frontier (filled vertices adjacent
// to something unfilled) and announced unfilled components with
// |announced| > |frontier|, returns a nonempty sub-list of the announced
// components whose return enables no force. Row/column elimination on the
// frontier-component incidence array.
std::vector<VertexSet> stalling_response(const Graph& g, const std::vector<int>& frontier,
                                         const std::vector<VertexSet>& announced);

}  // namespace zq
