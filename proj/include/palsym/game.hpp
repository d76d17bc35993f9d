#pragma once

// The alternating deletion game. The first player picks a word and wants the
// game to last; the second player moves first and wants it short. The game
// stops as soon as the word is a palindrome or an antipalindrome, and its
// value is the number of deletions made.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "palsym/word.hpp"

namespace palsym {

enum class Player {
  Minimizer,  ///< second player, moves first
  Maximizer,  ///< first player, chose the word
};

constexpr Player opponent(Player p) noexcept {
  return p == Player::Minimizer ? Player::Maximizer : Player::Minimizer;
}

std::string_view to_string(Player p) noexcept;

struct GameState {
  Word word;
  Player mover = Player::Minimizer;

  bool terminal() const noexcept { return is_symmetric(word); }
};

struct Move {
  std::size_t position = 0;  // 1-based

  friend bool operator==(const Move&, const Move&) = default;
};

struct GameOutcome {
  int value = 0;
  std::vector<std::size_t> principal_line;  // 1-based positions, one per move
};

inline constexpr std::size_t kGameLengthLimit = 20;
inline constexpr std::size_t kBestWordLimit = 14;

/// Every position of the current word; TerminalState if it is symmetric.
std::vector<Move> legal_moves(const GameState& s);

/// Minimax solver with a dense memo keyed by (word, mover). One solver can be
/// reused across many initial words.
class GameSolver {
 public:
  GameSolver() = default;

  /// Optimal number of remaining moves with `mover` to play.
  /// Throws LengthBudgetExceeded above kGameLengthLimit.
  int value(const Word& w, Player mover = Player::Minimizer);

  /// Value plus the principal line; among optimal moves the lowest position
  /// is played.
  GameOutcome solve(const Word& w, Player mover = Player::Minimizer);

  /// First move of the principal line; TerminalState if `s` is terminal.
  Move best_move(const GameState& s);

 private:
  int search(const Word& w, Player mover);
  void reserve(std::size_t length);

  std::vector<std::int8_t> memo_;  // index 2 * ((1 << len) | bits) + mover
};

GameOutcome game_value(const Word& w);

struct BestWord {
  int value = 0;
  Word word;  // lexicographically least word attaining value
};

/// Max game value over all words of length n. Throws LengthBudgetExceeded
/// above kBestWordLimit.
BestWord first_player_gain(std::size_t n);

/// a^k b^(k+2) for even n, a^k b^(k+3) for odd n; DomainError for n < 6.
Word strategy_word(int n);

/// Deletes the leftmost letter complementary to the opponent's last deletion
/// (position 1 if there is none). TerminalState on a symmetric word.
Move mirror_move(const Word& current, Letter opponent_deleted);

enum class EngineMode { Exact, Heuristic };

/// Exact: principal-line move for s.mover. Heuristic: the maximizer mirrors
/// `opponent_deleted` (or plays position 1 without one); the minimizer picks
/// the leftmost move with the smallest successor value, exact when the
/// successor fits the solver guard and S_d otherwise.
Move engine_move(const GameState& s, EngineMode mode,
                 std::optional<Letter> opponent_deleted = std::nullopt);

struct TranscriptEntry {
  Player mover = Player::Minimizer;
  std::size_t position = 0;
  Letter letter = Letter::A;
  Word result;
};

struct Transcript {
  Word initial;
  std::vector<TranscriptEntry> moves;
  SymmetryClass final_class = SymmetryClass::Neither;

  bool finished() const noexcept { return final_class != SymmetryClass::Neither; }
};

/// Plays `positions` from `initial`, alternating movers from `first`.
/// Throws TerminalState for a move after the game ended and DomainError for
/// an out-of-range position.
Transcript replay(const Word& initial, std::span<const std::size_t> positions,
                  Player first = Player::Minimizer);

}  // namespace palsym
