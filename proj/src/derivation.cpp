#include "surflink/derivation.hpp"

#include <map>
#include <stdexcept>

namespace surflink {

std::string to_string(Move m) {
  switch (m) {
    case Move::given: return "given";
    case Move::E1: return "E1";
    case Move::E2: return "E2";
    case Move::E3: return "E3";
    case Move::R1: return "R1";
    case Move::R2: return "R2";
    case Move::S: return "S";
  }
  return "?";
}

namespace {

OpMode mode_of(bool inverse) { return inverse ? OpMode::dual : OpMode::star; }

// Result of a single-premise move, or nullopt if the move does not apply.
std::optional<Relation> apply_unary(const ProofStep& s, const Relation& r) {
  switch (s.move) {
    case Move::E2: return Relation{r.second, r.first};
    case Move::S: return Relation{fsq_bar(r.first), fsq_bar(r.second)};
    case Move::R1:
      return Relation{fsq_op(r.first, s.operand, mode_of(s.inverse)),
                      fsq_op(r.second, s.operand, mode_of(s.inverse))};
    case Move::R2:
      return Relation{fsq_op(s.operand, r.first, mode_of(s.inverse)),
                      fsq_op(s.operand, r.second, mode_of(s.inverse))};
    default: return std::nullopt;
  }
}

class Closure {
 public:
  Closure(const SQPresentation& p, const DerivationBounds& b) : p_(p), b_(b) {
    for (int g = 1; g <= p.generators; ++g) letters_.push_back(FSQElement(g));
    terms_ = small_terms();
  }

  std::optional<Proof> run(const Relation& target) {
    if (target.first == target.second) {
      ProofStep s;
      s.move = Move::E1;
      s.result = target;
      return Proof{{s}};
    }
    std::vector<int> frontier;
    for (int i = 0; i < static_cast<int>(p_.relations.size()); ++i) {
      ProofStep s;
      s.given_index = i;
      s.result = p_.relations[i];
      if (const int id = add(std::move(s)); id >= 0) frontier.push_back(id);
    }
    if (auto hit = found(target)) return hit;
    for (int round = 0; round < b_.depth && !frontier.empty(); ++round) {
      std::vector<int> next;
      const int known_before = static_cast<int>(steps_.size());
      auto push = [&](ProofStep s) {
        if (const int id = add(std::move(s)); id >= 0) next.push_back(id);
        return steps_.size() >= b_.max_relations;
      };
      for (int id : frontier) {
        const Relation r = steps_[id].result;
        for (Move m : {Move::E2, Move::S}) {
          ProofStep s;
          s.move = m;
          s.premises = {id};
          s.result = *apply_unary(s, r);
          if (push(std::move(s))) return found(target);
        }
        for (const FSQElement& a : letters_) {
          for (bool inv : {false, true}) {
            ProofStep s;
            s.move = Move::R1;
            s.premises = {id};
            s.operand = a;
            s.inverse = inv;
            s.result = *apply_unary(s, r);
            if (push(std::move(s))) return found(target);
          }
        }
        for (const FSQElement& t : terms_) {
          for (bool inv : {false, true}) {
            ProofStep s;
            s.move = Move::R2;
            s.premises = {id};
            s.operand = t;
            s.inverse = inv;
            s.result = *apply_unary(s, r);
            if (push(std::move(s))) return found(target);
          }
        }
        // E3 against everything known before this round, both orders
        for (int other = 0; other < known_before; ++other) {
          if (r.second == steps_[other].result.first && r.first != steps_[other].result.second) {
            ProofStep s;
            s.move = Move::E3;
            s.premises = {id, other};
            s.result = {r.first, steps_[other].result.second};
            if (push(std::move(s))) return found(target);
          }
          if (steps_[other].result.second == r.first && steps_[other].result.first != r.second) {
            ProofStep s;
            s.move = Move::E3;
            s.premises = {other, id};
            s.result = {steps_[other].result.first, r.second};
            if (push(std::move(s))) return found(target);
          }
        }
      }
      if (auto hit = found(target)) return hit;
      frontier = std::move(next);
    }
    return std::nullopt;
  }

 private:
  std::vector<FSQElement> small_terms() const {
    std::vector<FSQElement> out;
    std::vector<Word> tails{Word{}};
    for (int len = 1; len <= b_.term_tail; ++len) {
      std::vector<Word> longer;
      for (const Word& w : tails) {
        if (static_cast<int>(w.size()) != len - 1) continue;
        for (int g = 1; g <= p_.generators; ++g) {
          for (int sgn : {1, -1}) {
            Word v = w * Word::generator(g, sgn);
            if (static_cast<int>(v.size()) == len) longer.push_back(std::move(v));
          }
        }
      }
      tails.insert(tails.end(), longer.begin(), longer.end());
    }
    for (int g = 1; g <= p_.generators; ++g) {
      for (bool bar : {false, true}) {
        for (const Word& w : tails) {
          FSQElement e(g, bar, w);
          if (e.tail() == w) out.push_back(std::move(e));
        }
      }
    }
    return out;
  }

  int add(ProofStep s) {
    const Relation& r = s.result;
    if (static_cast<int>(r.first.tail().size()) > b_.max_tail ||
        static_cast<int>(r.second.tail().size()) > b_.max_tail)
      return -1;
    if (index_.contains(r)) return -1;
    const int id = static_cast<int>(steps_.size());
    index_.emplace(r, id);
    steps_.push_back(std::move(s));
    return id;
  }

  std::optional<Proof> found(const Relation& target) const {
    const auto it = index_.find(target);
    if (it == index_.end()) return std::nullopt;
    // keep only the steps the conclusion depends on, renumbered
    std::vector<int> order;
    std::map<int, int> renum;
    auto visit = [&](auto&& self, int id) -> void {
      if (renum.contains(id)) return;
      for (int pre : steps_[id].premises) self(self, pre);
      renum.emplace(id, static_cast<int>(order.size()));
      order.push_back(id);
    };
    visit(visit, it->second);
    Proof proof;
    for (int id : order) {
      ProofStep s = steps_[id];
      for (int& pre : s.premises) pre = renum.at(pre);
      proof.steps.push_back(std::move(s));
    }
    return proof;
  }

  const SQPresentation& p_;
  DerivationBounds b_;
  std::vector<FSQElement> letters_;
  std::vector<FSQElement> terms_;
  std::vector<ProofStep> steps_;
  std::map<Relation, int> index_;
};

bool uses_generator(const FSQElement& e, int g) {
  if (e.base() == g) return true;
  for (Letter l : e.tail().letters())
    if (generator_of(l) == g) return true;
  return false;
}

}  // namespace

std::optional<Proof> derive_consequence(const SQPresentation& p, const Relation& target,
                                        const DerivationBounds& bounds) {
  validate(p);
  if (bounds.depth < 0 || bounds.max_tail < 0) throw std::invalid_argument("negative bound");
  return Closure(p, bounds).run(target);
}

bool verify_proof(const SQPresentation& p, const Proof& proof, const Relation& target) {
  if (proof.steps.empty()) return false;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    for (int pre : s.premises)
      if (pre < 0 || static_cast<std::size_t>(pre) >= i) return false;
    switch (s.move) {
      case Move::given:
        if (s.given_index < 0 || s.given_index >= static_cast<int>(p.relations.size()) ||
            p.relations[s.given_index] != s.result)
          return false;
        break;
      case Move::E1:
        if (s.result.first != s.result.second) return false;
        break;
      case Move::E3: {
        if (s.premises.size() != 2) return false;
        const Relation& a = proof.steps[s.premises[0]].result;
        const Relation& b = proof.steps[s.premises[1]].result;
        if (a.second != b.first || s.result != Relation{a.first, b.second}) return false;
        break;
      }
      case Move::R1:
        if (!s.operand.tail().empty() || s.operand.barred() ||
            s.operand.base() > p.generators)
          return false;
        [[fallthrough]];
      case Move::E2:
      case Move::R2:
      case Move::S: {
        if (s.premises.size() != 1) return false;
        if (s.operand.max_generator() > p.generators) return false;
        const auto r = apply_unary(s, proof.steps[s.premises[0]].result);
        if (!r || *r != s.result) return false;
        break;
      }
    }
  }
  return proof.conclusion() == target;
}

SQPresentation tietze_apply(const SQPresentation& p, TietzeMove move,
                            const TietzePayload& payload) {
  validate(p);
  SQPresentation out = p;
  switch (move) {
    case TietzeMove::T1: {
      if (!payload.proof || !verify_proof(p, *payload.proof, payload.relation)) {
        throw std::invalid_argument("T1 needs a certificate deriving the new relation");
      }
      out.relations.push_back(payload.relation);
      return out;
    }
    case TietzeMove::T2: {
      const int i = payload.relation_index;
      if (i < 0 || i >= static_cast<int>(p.relations.size())) {
        throw std::out_of_range("T2 relation index out of range");
      }
      out.relations.erase(out.relations.begin() + i);
      if (!payload.proof || !verify_proof(out, *payload.proof, p.relations[i])) {
        throw std::invalid_argument("T2 needs a certificate deriving the dropped relation");
      }
      return out;
    }
    case TietzeMove::T3: {
      if (payload.element.max_generator() > p.generators) {
        throw std::invalid_argument("T3 element uses an unknown generator");
      }
      out.generators = p.generators + 1;
      out.relations.emplace_back(FSQElement(out.generators), payload.element);
      return out;
    }
    case TietzeMove::T4: {
      const int g = payload.generator;
      const int i = payload.relation_index;
      if (g < 1 || g > p.generators) throw std::out_of_range("T4 generator out of range");
      if (i < 0 || i >= static_cast<int>(p.relations.size())) {
        throw std::out_of_range("T4 relation index out of range");
      }
      const auto& [l, r] = p.relations[i];
      const bool defines = (l == FSQElement(g) && !uses_generator(r, g)) ||
                           (r == FSQElement(g) && !uses_generator(l, g));
      if (!defines) {
        throw std::invalid_argument("T4 relation must read x" + std::to_string(g) + " = r");
      }
      for (int j = 0; j < static_cast<int>(p.relations.size()); ++j) {
        if (j == i) continue;
        if (uses_generator(p.relations[j].first, g) || uses_generator(p.relations[j].second, g)) {
          throw std::invalid_argument("T4: x" + std::to_string(g) + " occurs in relation " +
                                      std::to_string(j));
        }
      }
      return eliminate_generator(p, g, i);
    }
  }
  return out;
}

}  // namespace surflink
