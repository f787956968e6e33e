#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace mapf {

// Grid coordinates. x grows to the right, y grows downward, matching the
// row order of map text files.
struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
  size_t operator()(const Cell& c) const noexcept {
    return std::hash<uint64_t>{}((uint64_t(uint32_t(c.x)) << 32) | uint32_t(c.y));
  }
};

inline int manhattan(Cell a, Cell b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// The five-action space. Enum order doubles as the deterministic
// tie-break order everywhere (argmax ties, diagnostics).
enum class Action : uint8_t { Up = 0, Down, Left, Right, Stop };

inline constexpr std::array<Action, 5> kAllActions = {
    Action::Up, Action::Down, Action::Left, Action::Right, Action::Stop};

inline constexpr int kActionCount = 5;

inline Cell displacement(Action a) {
  switch (a) {
    case Action::Up: return {0, -1};
    case Action::Down: return {0, 1};
    case Action::Left: return {-1, 0};
    case Action::Right: return {1, 0};
    case Action::Stop: return {0, 0};
  }
  return {0, 0};
}

inline Cell step_to(Cell c, Action a) {
  Cell d = displacement(a);
  return {c.x + d.x, c.y + d.y};
}

inline const char* action_name(Action a) {
  switch (a) {
    case Action::Up: return "up";
    case Action::Down: return "down";
    case Action::Left: return "left";
    case Action::Right: return "right";
    case Action::Stop: return "stop";
  }
  return "?";
}

// Outcome tag for one agent in one tick.
enum class Event : uint8_t {
  MovedToward,
  MovedAway,
  StayOnGoal,
  StayOffGoal,
  Collision,
  Finish,
};

inline const char* event_name(Event e) {
  switch (e) {
    case Event::MovedToward: return "moved_toward";
    case Event::MovedAway: return "moved_away";
    case Event::StayOnGoal: return "stay_on_goal";
    case Event::StayOffGoal: return "stay_off_goal";
    case Event::Collision: return "collision";
    case Event::Finish: return "finish";
  }
  return "?";
}

// Per-event reward values. The standard table is the environment default;
// the uniform variant collapses every non-goal action to one movement cost
// and is used by the joint-MDP checker.
struct RewardTable {
  double move_toward = -0.070;
  double move_away = -0.075;
  double stay_on_goal = 0.0;
  double stay_off_goal = -0.075;
  double collision = -0.5;
  double finish_bonus = 3.0;
  // Arrival at the goal adds finish_bonus on top of the move reward.
  bool grant_finish_bonus = true;

  static RewardTable standard() { return {}; }

  static RewardTable standard_no_finish() {
    RewardTable t;
    t.grant_finish_bonus = false;
    return t;
  }

  static RewardTable uniform(double r_move = -0.075, double r_collision = -0.5) {
    RewardTable t;
    t.move_toward = r_move;
    t.move_away = r_move;
    t.stay_off_goal = r_move;
    t.stay_on_goal = 0.0;
    t.collision = r_collision;
    t.grant_finish_bonus = false;
    return t;
  }
};

}  // namespace mapf
