#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surflink/sq_presentation.hpp"

namespace surflink {

enum class Move { given, E1, E2, E3, R1, R2, S };
std::string to_string(Move m);

struct ProofStep {
  Move move = Move::given;
  Relation result;
  std::vector<int> premises;  // indices of earlier steps
  int given_index = -1;       // for Move::given
  FSQElement operand;         // a for R1, t for R2
  bool inverse = false;       // the x^{-a} / t^{-x} variant
};

// Steps in order; the last one establishes the target.
struct Proof {
  std::vector<ProofStep> steps;
  const Relation& conclusion() const { return steps.back().result; }
};

struct DerivationBounds {
  int depth = 3;             // rounds of closure
  int max_tail = 8;          // longest tail kept on either side
  int term_tail = 0;         // R2 uses t = x or ~x with tails up to this length
  std::size_t max_relations = 200000;
};

// Breadth-first closure of the relations under E1-E3, R1, R2 and S within
// the bounds. nullopt means not found within them.
std::optional<Proof> derive_consequence(const SQPresentation& p, const Relation& target,
                                        const DerivationBounds& bounds = {});

// Replays every step against p; true iff each step is a legal move and the
// last step concludes `target`.
bool verify_proof(const SQPresentation& p, const Proof& proof, const Relation& target);

enum class TietzeMove { T1, T2, T3, T4 };

struct TietzePayload {
  Relation relation;          // T1: relation to add
  std::optional<Proof> proof; // T1, T2
  int relation_index = -1;    // T2: relation to drop; T4: defining relation
  int generator = 0;          // T4: generator to drop
  FSQElement element;         // T3: new generator equals this element
};

// T1 adds a certified consequence, T2 drops a relation certified from the
// others, T3 adds x_{k+1} = element, T4 drops a generator x_g together with
// its defining relation x_g = r when x_g occurs nowhere else.
SQPresentation tietze_apply(const SQPresentation& p, TietzeMove move,
                            const TietzePayload& payload);

}  // namespace surflink
