#include "palsym/game.hpp"

#include <algorithm>
#include <limits>

#include "palsym/errors.hpp"
#include "palsym/subseq.hpp"

namespace palsym {
namespace {

std::size_t memo_index(const Word& w, Player mover) {
  const std::uint64_t code = (std::uint64_t{1} << w.size()) | w.bits();
  return 2 * code + (mover == Player::Maximizer ? 1U : 0U);
}

// Deleting any letter of a run gives the same word; only run heads matter.
bool run_head(const Word& w, std::size_t i) { return i == 0 || w[i] != w[i - 1]; }

}  // namespace

std::string_view to_string(Player p) noexcept {
  return p == Player::Minimizer ? "second" : "first";
}

std::vector<Move> legal_moves(const GameState& s) {
  if (s.terminal()) throw TerminalState();
  std::vector<Move> moves;
  for (std::size_t p = 1; p <= s.word.size(); ++p) moves.push_back({p});
  return moves;
}

void GameSolver::reserve(std::size_t length) {
  if (length > kGameLengthLimit) throw LengthBudgetExceeded(length, kGameLengthLimit);
  const std::size_t needed = std::size_t{4} << length;
  if (memo_.size() < needed) memo_.resize(needed, -1);
}

int GameSolver::value(const Word& w, Player mover) {
  reserve(w.size());
  return search(w, mover);
}

int GameSolver::search(const Word& w, Player mover) {
  if (is_symmetric(w)) return 0;
  std::int8_t& slot = memo_[memo_index(w, mover)];
  if (slot >= 0) return slot;
  const bool minimize = mover == Player::Minimizer;
  int best = minimize ? std::numeric_limits<int>::max() : -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!run_head(w, i)) continue;
    const int v = search(w.erase(i), opponent(mover));
    best = minimize ? std::min(best, v) : std::max(best, v);
  }
  slot = static_cast<std::int8_t>(best + 1);
  return slot;
}

Move GameSolver::best_move(const GameState& s) {
  if (s.terminal()) throw TerminalState();
  const int target = value(s.word, s.mover) - 1;
  for (std::size_t i = 0; i < s.word.size(); ++i) {
    if (search(s.word.erase(i), opponent(s.mover)) == target) return {i + 1};
  }
  return {1};  // unreachable: some successor attains the value
}

GameOutcome GameSolver::solve(const Word& w, Player mover) {
  GameOutcome out;
  out.value = value(w, mover);
  GameState s{w, mover};
  while (!s.terminal()) {
    const Move m = best_move(s);
    out.principal_line.push_back(m.position);
    s = {s.word.erase(m.position - 1), opponent(s.mover)};
  }
  return out;
}

GameOutcome game_value(const Word& w) {
  GameSolver solver;
  return solver.solve(w);
}

BestWord first_player_gain(std::size_t n) {
  if (n > kBestWordLimit) throw LengthBudgetExceeded(n, kBestWordLimit);
  GameSolver solver;
  BestWord best{-1, {}};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Word w = Word::from_bits(bits, n);
    const int v = solver.value(w);
    if (v > best.value) best = {v, w};
  }
  return best;
}

Word strategy_word(int n) {
  if (n < 6) throw DomainError("the mirror strategy word is defined for n >= 6");
  const auto k = static_cast<std::size_t>(n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2);
  const std::size_t extra = n % 2 == 0 ? 2 : 3;
  return Word::repeat(Letter::A, k).concat(Word::repeat(Letter::B, k + extra));
}

Move mirror_move(const Word& current, Letter opponent_deleted) {
  if (is_symmetric(current)) throw TerminalState();
  const Letter wanted = complement(opponent_deleted);
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (current[i] == wanted) return {i + 1};
  }
  return {1};
}

Move engine_move(const GameState& s, EngineMode mode, std::optional<Letter> opponent_deleted) {
  if (s.terminal()) throw TerminalState();
  if (mode == EngineMode::Exact) {
    GameSolver solver;
    return solver.best_move(s);
  }
  if (s.mover == Player::Maximizer) {
    return opponent_deleted ? mirror_move(s.word, *opponent_deleted) : Move{1};
  }
  GameSolver solver;
  Move best{1};
  int best_value = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < s.word.size(); ++i) {
    const Word next = s.word.erase(i);
    const int v = next.size() <= kGameLengthLimit ? solver.value(next, Player::Maximizer)
                                                  : sd(next).value;
    if (v < best_value) {
      best_value = v;
      best = {i + 1};
    }
  }
  return best;
}

Transcript replay(const Word& initial, std::span<const std::size_t> positions, Player first) {
  Transcript t;
  t.initial = initial;
  Word current = initial;
  Player mover = first;
  for (std::size_t p : positions) {
    if (is_symmetric(current)) throw TerminalState();
    if (p < 1 || p > current.size()) {
      throw DomainError("position " + std::to_string(p) + " is outside 1.." +
                        std::to_string(current.size()));
    }
    const Letter letter = current[p - 1];
    current = current.erase(p - 1);
    t.moves.push_back({mover, p, letter, current});
    mover = opponent(mover);
  }
  t.final_class = symmetry_class(current);
  return t;
}

}  // namespace palsym
