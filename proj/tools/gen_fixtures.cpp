// Emits the deterministic fixtures consumed by fixtures/matrix.json:
//   <dir>/playback_mock_a.json, <dir>/playback_mock_b.json
//   <dir>/manual/<run_id>.json      one manual test session per run
//   <dir>/issues/<run_id>.json      static-analysis findings for two runs
//
// Usage: gen_fixtures [fixtures_dir]   (default "fixtures")

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swproc/domain.hpp"
#include "swproc/json_io.hpp"
#include "swproc/llm_gateway.hpp"

namespace fs = std::filesystem;
using swproc::Json;
using swproc::PhaseKind;
using swproc::ProcessModel;
using swproc::RoleKind;

namespace {

std::string key(const std::string& project, ProcessModel process, RoleKind role,
                PhaseKind phase, std::optional<int> sprint, int attempt) {
    swproc::CompletionKey k;
    k.project_id = project;
    k.process = process;
    k.role = role;
    k.phase = {phase, sprint};
    k.attempt = attempt;
    return k.str();
}

struct EntrySink {
    Json entries = Json::object();

    void add(const std::string& k, const std::string& text, long prompt_tokens,
             long completion_tokens, double latency) {
        Json e{{"text", text},
               {"prompt_tokens", prompt_tokens},
               {"completion_tokens", completion_tokens},
               {"latency", latency}};
        entries[k] = std::move(e);
    }

    // no token counts: exercises the chars/4 fallback in playback
    void add_uncounted(const std::string& k, const std::string& text, double latency) {
        entries[k] = Json{{"text", text}, {"latency", latency}};
    }
};

Json prd_doc(bool snake, const std::string& language) {
    Json pool = Json::array();
    if (snake) {
        pool.push_back(Json::array({"P0", "Render the snake and the playing board"}));
        pool.push_back(Json::array({"P0", "Steer the snake with the arrow keys"}));
        pool.push_back(Json::array({"P1", "Spawn food and grow the snake on pickup"}));
        pool.push_back(Json::array({"P2", "Show the current score above the board"}));
    } else {
        pool.push_back(Json::array({"P0", "Record an expense with amount and category"}));
        pool.push_back(Json::array({"P0", "List recorded expenses with a running total"}));
    }
    const std::string name = snake ? "Snake Game" : "Expense Tracker Application";
    Json j;
    j["Language"] = "English";
    j["Programming Language"] = language;
    j["Original Requirements"] =
        snake ? "A classic snake game playable in the browser."
              : "A command line tool for recording and reviewing personal expenses.";
    j["Project Name"] = name;
    j["Product Goals"] = Json::array({"Deliver a small, finished application",
                                      "Keep the controls and output obvious",
                                      "Run without installation beyond the runtime"});
    j["User Stories"] = Json::array(
        {snake ? "As a player, I want to steer the snake so that I can collect food"
               : "As a user, I want to record an expense so that I can track spending",
         snake ? "As a player, I want a score so that I can compare attempts"
               : "As a user, I want a list with a total so that I can review spending"});
    j["Competitive Quadrant Chart"] =
        "Small hobby tools cluster in the low-complexity, low-reach quadrant; this "
        "product aims for high polish within that quadrant.";
    j["Requirement Analysis"] =
        "All requirements are implementable with the standard runtime alone; no "
        "external services are needed.";
    j["Requirement Pool"] = pool;
    j["UI Design draft"] =
        snake ? "A single page with a centred canvas and the score line above it."
              : "Plain terminal output: one expense per line, total on the last line.";
    return j;
}

Json design_doc(bool snake, int sprint) {
    Json j;
    j["architecture_description"] =
        snake ? "A render loop over a grid model; input events mutate the direction "
                "state, the loop advances the snake each tick."
              : "A storage module owning the expense list and a thin CLI layer that "
                "parses commands and prints reports.";
    j["class_diagram"] = snake ? "classDiagram\n  class Game\n  class Snake\n  Game --> Snake"
                               : "classDiagram\n  class ExpenseStore\n  class Cli\n  Cli --> ExpenseStore";
    j["data_flow"] = snake
                         ? "Key events set the pending direction; each tick moves the head, "
                           "checks collisions, and redraws the canvas."
                         : "The CLI parses argv into a command, calls the store, and formats "
                           "the returned rows.";
    j["ui_design"] = snake ? "400x400 canvas, 20px cells, score paragraph above the board."
                           : "add/list subcommands; list prints aligned columns.";
    j["state_management"] = snake
                                ? "Game state lives in one object: snake cells, direction, "
                                  "food cell, score, and a game-over flag."
                                : "The store keeps an in-memory list; the CLI is stateless.";
    if (sprint == 0) {
        j["requirements_mapping"] =
            "Each pool entry maps to one module: board rendering, input handling, "
            "food logic, and score display.";
    } else {
        j["components"] = "Components touched this sprint only; earlier increments "
                          "stay as delivered.";
    }
    return j;
}

Json plan_doc(const char* flavor) {
    Json cases = Json::array();
    cases.push_back(Json{{"name", std::string(flavor) + " case 1"},
                         {"expected", "behaves as specified"}});
    cases.push_back(Json{{"name", std::string(flavor) + " case 2"},
                         {"expected", "rejects invalid input"}});
    Json j;
    j["test_cases"] = cases;
    if (std::string(flavor) == "acceptance") {
        j["requirements_coverage"] = "Every pool entry is covered by at least one case.";
        j["pass_criteria"] = "All cases pass on the delivered build.";
        j["test_environment"] = "A current desktop browser or Python 3 runtime.";
        j["test_data"] = "No external data sets are required.";
    } else if (std::string(flavor) == "integration") {
        j["component_interactions"] = "Each case exercises one module boundary.";
        j["pass_criteria"] = "All boundaries behave as designed.";
    } else {
        j["coverage"] = "Each public function has at least one case.";
        j["pass_criteria"] = "All unit cases pass.";
    }
    return j;
}

std::string report_json(const std::vector<std::pair<std::string, bool>>& cases) {
    Json arr = Json::array();
    for (const auto& [name, passed] : cases)
        arr.push_back(Json{{"name", name}, {"verdict", passed ? "Pass" : "Fail"}});
    return Json{{"test_cases", arr}}.dump(2);
}

const char* kSnakeBundleA = R"BUNDLE(Here is the complete implementation.

```html
<!-- index.html -->
<!DOCTYPE html>
<html>
<head>
  <meta charset="utf-8">
  <title>Snake</title>
  <link rel="stylesheet" href="style.css">
</head>
<body>
  <p id="score">0</p>
  <canvas id="board" width="400" height="400"></canvas>
  <script src="script.js"></script>
</body>
</html>
```

```css
body { font-family: sans-serif; text-align: center; }
canvas { border: 1px solid #333; background: #f8f8f8; }
```

```js
const ctx = document.getElementById('board').getContext('2d');
let snake = [{x: 10, y: 10}];
let dir = {x: 1, y: 0};
let food = {x: 5, y: 5};
let score = 0;
document.addEventListener('keydown', (e) => {
  if (e.key === 'ArrowUp') dir = {x: 0, y: -1};
  if (e.key === 'ArrowDown') dir = {x: 0, y: 1};
  if (e.key === 'ArrowLeft') dir = {x: -1, y: 0};
  if (e.key === 'ArrowRight') dir = {x: 1, y: 0};
});
function tick() {
  const head = {x: snake[0].x + dir.x, y: snake[0].y + dir.y};
  snake.unshift(head);
  if (head.x === food.x && head.y === food.y) {
    score += 1;
    food = {x: (head.x + 7) % 20, y: (head.y + 3) % 20};
  } else {
    snake.pop();
  }
  ctx.clearRect(0, 0, 400, 400);
  snake.forEach(c => ctx.fillRect(c.x * 20, c.y * 20, 18, 18));
  ctx.fillRect(food.x * 20, food.y * 20, 18, 18);
  document.getElementById('score').textContent = score;
}
setInterval(tick, 150);
```
)BUNDLE";

const char* kSnakeBundleB = R"BUNDLE(All files follow.

```html
<!-- index.html -->
<!DOCTYPE html>
<html>
<head>
  <meta charset="utf-8">
  <title>Snake</title>
  <link rel="stylesheet" href="style.css">
</head>
<body>
  <header><h1>Snake</h1><p id="score">Score: 0</p></header>
  <canvas id="board" width="400" height="400"></canvas>
  <script src="util.js"></script>
  <script src="script.js"></script>
</body>
</html>
```

```css
body { font-family: sans-serif; text-align: center; margin: 2rem; }
header h1 { margin-bottom: 0; }
canvas { border: 2px solid #222; background: #fafafa; }
#score { color: #444; }
```

```js
// util.js
function wrap(v, n) {
  return (v + n) % n;
}
function cellsEqual(a, b) {
  return a.x === b.x && a.y === b.y;
}
```

```js
// script.js
const ctx = document.getElementById('board').getContext('2d');
const GRID = 20;
let snake = [{x: 10, y: 10}, {x: 9, y: 10}];
let dir = {x: 1, y: 0};
let food = {x: 4, y: 6};
let score = 0;
let over = false;
document.addEventListener('keydown', (e) => {
  const turns = {
    ArrowUp: {x: 0, y: -1},
    ArrowDown: {x: 0, y: 1},
    ArrowLeft: {x: -1, y: 0},
    ArrowRight: {x: 1, y: 0},
  };
  if (turns[e.key]) dir = turns[e.key];
});
function step() {
  if (over) return;
  const head = {x: wrap(snake[0].x + dir.x, GRID), y: wrap(snake[0].y + dir.y, GRID)};
  if (snake.some(c => cellsEqual(c, head))) {
    over = true;
    return;
  }
  snake.unshift(head);
  if (cellsEqual(head, food)) {
    score += 1;
    food = {x: wrap(head.x + 7, GRID), y: wrap(head.y + 3, GRID)};
  } else {
    snake.pop();
  }
  draw();
}
function draw() {
  ctx.clearRect(0, 0, 400, 400);
  snake.forEach(c => ctx.fillRect(c.x * 20, c.y * 20, 18, 18));
  ctx.fillRect(food.x * 20, food.y * 20, 18, 18);
  document.getElementById('score').textContent = 'Score: ' + score;
}
setInterval(step, 140);
```
)BUNDLE";

// sprint 2 of the agile snake run: food logic lands, script.js is replaced
const char* kSnakeSprint2 = R"BUNDLE(Updated implementation for this sprint.

```js
const ctx = document.getElementById('board').getContext('2d');
let snake = [{x: 10, y: 10}];
let dir = {x: 1, y: 0};
let food = {x: 5, y: 5};
let score = 0;
document.addEventListener('keydown', (e) => {
  if (e.key === 'ArrowUp' && dir.y === 0) dir = {x: 0, y: -1};
  if (e.key === 'ArrowDown' && dir.y === 0) dir = {x: 0, y: 1};
  if (e.key === 'ArrowLeft' && dir.x === 0) dir = {x: -1, y: 0};
  if (e.key === 'ArrowRight' && dir.x === 0) dir = {x: 1, y: 0};
});
function placeFood(head) {
  food = {x: (head.x * 7 + 5) % 20, y: (head.y * 3 + 11) % 20};
}
function tick() {
  const head = {x: (snake[0].x + dir.x + 20) % 20, y: (snake[0].y + dir.y + 20) % 20};
  snake.unshift(head);
  if (head.x === food.x && head.y === food.y) {
    score += 1;
    placeFood(head);
  } else {
    snake.pop();
  }
  ctx.clearRect(0, 0, 400, 400);
  snake.forEach(c => ctx.fillRect(c.x * 20, c.y * 20, 18, 18));
  ctx.fillRect(food.x * 20, food.y * 20, 18, 18);
  document.getElementById('score').textContent = score;
}
setInterval(tick, 150);
```
)BUNDLE";

// sprint 3: score styling lands, script.js and style.css are replaced
const char* kSnakeSprint3 = R"BUNDLE(Final sprint increment.

```css
body { font-family: sans-serif; text-align: center; }
canvas { border: 1px solid #333; background: #f8f8f8; }
#score { font-size: 1.4rem; font-weight: bold; }
```

```js
const ctx = document.getElementById('board').getContext('2d');
let snake = [{x: 10, y: 10}];
let dir = {x: 1, y: 0};
let food = {x: 5, y: 5};
let score = 0;
document.addEventListener('keydown', (e) => {
  if (e.key === 'ArrowUp' && dir.y === 0) dir = {x: 0, y: -1};
  if (e.key === 'ArrowDown' && dir.y === 0) dir = {x: 0, y: 1};
  if (e.key === 'ArrowLeft' && dir.x === 0) dir = {x: -1, y: 0};
  if (e.key === 'ArrowRight' && dir.x === 0) dir = {x: 1, y: 0};
});
function placeFood(head) {
  food = {x: (head.x * 7 + 5) % 20, y: (head.y * 3 + 11) % 20};
}
function updateScore() {
  document.getElementById('score').textContent = 'Score: ' + score;
}
function tick() {
  const head = {x: (snake[0].x + dir.x + 20) % 20, y: (snake[0].y + dir.y + 20) % 20};
  snake.unshift(head);
  if (head.x === food.x && head.y === food.y) {
    score += 1;
    placeFood(head);
  } else {
    snake.pop();
  }
  ctx.clearRect(0, 0, 400, 400);
  snake.forEach(c => ctx.fillRect(c.x * 20, c.y * 20, 18, 18));
  ctx.fillRect(food.x * 20, food.y * 20, 18, 18);
  updateScore();
}
setInterval(tick, 150);
```
)BUNDLE";

const char* kExpenseBundleA = R"BUNDLE(The implementation: a storage module plus the CLI entry point.

```python
# tracker/store.py
class ExpenseStore:
    def __init__(self):
        self.rows = []

    def add(self, amount, category):
        if amount <= 0:
            raise ValueError("amount must be positive")
        self.rows.append((amount, category))

    def total(self):
        return sum(amount for amount, _ in self.rows)
```

```python
import argparse

from tracker.store import ExpenseStore

store = ExpenseStore()


def main():
    parser = argparse.ArgumentParser(prog="expenses")
    sub = parser.add_subparsers(dest="cmd", required=True)
    add = sub.add_parser("add")
    add.add_argument("amount", type=float)
    add.add_argument("category")
    sub.add_parser("list")
    args = parser.parse_args()
    if args.cmd == "add":
        store.add(args.amount, args.category)
    else:
        for amount, category in store.rows:
            print(f"{category}\t{amount:.2f}")
        print(f"total\t{store.total():.2f}")


if __name__ == "__main__":
    main()
```
)BUNDLE";

const char* kExpenseBundleB = R"BUNDLE(Implementation split into storage, reporting, and the entry point.

```python
# tracker/store.py
import json


class ExpenseStore:
    def __init__(self, path=None):
        self.path = path
        self.rows = []

    def add(self, amount, category):
        if amount <= 0:
            raise ValueError("amount must be positive")
        self.rows.append({"amount": amount, "category": category})

    def save(self):
        if self.path:
            with open(self.path, "w") as fh:
                json.dump(self.rows, fh)
```

```python
# tracker/report.py
def render(rows):
    lines = [f"{r['category']}\t{r['amount']:.2f}" for r in rows]
    total = sum(r["amount"] for r in rows)
    lines.append(f"total\t{total:.2f}")
    return "\n".join(lines)
```

```python
import argparse

from tracker.report import render
from tracker.store import ExpenseStore


def main():
    parser = argparse.ArgumentParser(prog="expenses")
    sub = parser.add_subparsers(dest="cmd", required=True)
    add = sub.add_parser("add")
    add.add_argument("amount", type=float)
    add.add_argument("category")
    sub.add_parser("list")
    args = parser.parse_args()
    store = ExpenseStore()
    if args.cmd == "add":
        store.add(args.amount, args.category)
        store.save()
    else:
        print(render(store.rows))


if __name__ == "__main__":
    main()
```
)BUNDLE";

std::string deploy_note(bool snake, int sprint) {
    std::string note = "# Release note\n\n";
    if (sprint > 0) note = "# Sprint " + std::to_string(sprint) + " release note\n\n";
    note += snake ? "Shipped the browser snake game. Open index.html in any modern "
                    "browser; steer with the arrow keys.\n"
                  : "Shipped the expense tracker CLI. Run `python main.py add 12.50 "
                    "food` to record and `python main.py list` to review.\n";
    note += "\nKnown gaps flagged by testing are tracked for the next iteration.\n";
    return note;
}

void write_json(const fs::path& path, const Json& j) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

struct ProjectNames {
    std::string id;
    bool snake;
    std::string language;
};

void emit_model(EntrySink& sink, const ProjectNames& proj, bool model_b) {
    const std::string& id = proj.id;
    const std::string prd = model_b
                                ? "```json\n" + prd_doc(proj.snake, proj.language).dump(2) + "\n```"
                                : prd_doc(proj.snake, proj.language).dump(2);
    const std::string design = design_doc(proj.snake, 0).dump(2);
    const std::string bundle =
        proj.snake ? (model_b ? kSnakeBundleB : kSnakeBundleA)
                   : (model_b ? kExpenseBundleB : kExpenseBundleA);
    const double lat_doc = model_b ? 0.75 : 0.5;
    const double lat_code = model_b ? 1.5 : 1.0;
    const double lat_test = model_b ? 0.375 : 0.25;
    const long pt = model_b ? 860 : 820;
    const long ct = model_b ? 520 : 410;

    // waterfall -----------------------------------------------------------
    {
        const ProcessModel p = ProcessModel::Waterfall;
        sink.add(key(id, p, RoleKind::ProjectManager, PhaseKind::Requirements, {}, 1), prd,
                 pt, ct, lat_doc);
        sink.add(key(id, p, RoleKind::Designer, PhaseKind::Design, {}, 1), design, pt + 200,
                 ct - 60, lat_doc);
        sink.add(key(id, p, RoleKind::Developer, PhaseKind::Implementation, {}, 1), bundle,
                 pt + 400, ct + 300, lat_code);

        if (proj.snake && model_b) {
            // first reply is unusable; the repair attempt succeeds
            sink.add(key(id, p, RoleKind::UnitTestExecutor, PhaseKind::UnitTesting, {}, 1),
                     "The unit run could not be completed in this environment; please "
                     "rerun once the tooling is back.",
                     pt, 40, lat_test);
            sink.add(key(id, p, RoleKind::UnitTestExecutor, PhaseKind::UnitTesting, {}, 2),
                     report_json({{"wrap indexes stay on the grid", true},
                                  {"self collision ends the game", true},
                                  {"food pickup grows the snake", false},
                                  {"score increments on pickup", true}}),
                     pt + 60, 150, lat_test);
        } else {
            sink.add(key(id, p, RoleKind::UnitTestExecutor, PhaseKind::UnitTesting, {}, 1),
                     report_json(proj.snake
                                     ? std::vector<std::pair<std::string, bool>>{
                                           {"movement updates the head", true},
                                           {"food pickup grows the snake", false},
                                           {"score increments on pickup", true},
                                           {"board redraws each tick", true}}
                                     : std::vector<std::pair<std::string, bool>>{
                                           {"add stores a positive amount", true},
                                           {"add rejects zero", false},
                                           {"total sums all rows", true}}),
                     pt, 140, lat_test);
        }

        if (proj.snake && model_b) {
            // free-text verdict lines exercise the fallback scanner
            sink.add(key(id, p, RoleKind::IntegrationTestExecutor,
                         PhaseKind::IntegrationTesting, {}, 1),
                     "Integration results:\n"
                     "- PASSED: input handler feeds the tick loop\n"
                     "- FAILED: util helpers are loaded before use\n"
                     "- PASSED: canvas and score stay in sync\n",
                     pt, 60, lat_test);
        } else {
            sink.add(key(id, p, RoleKind::IntegrationTestExecutor,
                         PhaseKind::IntegrationTesting, {}, 1),
                     report_json(proj.snake
                                     ? std::vector<std::pair<std::string, bool>>{
                                           {"input handler feeds the tick loop", true},
                                           {"canvas and score stay in sync", true}}
                                     : std::vector<std::pair<std::string, bool>>{
                                           {"cli add reaches the store", true},
                                           {"cli list renders the total", true}}),
                     pt, 90, lat_test);
        }

        sink.add(key(id, p, RoleKind::AcceptanceTestExecutor, PhaseKind::AcceptanceTesting,
                     {}, 1),
                 report_json(proj.snake
                                 ? std::vector<std::pair<std::string, bool>>{
                                       {"board renders on load", true},
                                       {"arrow keys steer the snake", true},
                                       {"food appears after pickup", false},
                                       {"score is visible above the board", true},
                                       {"page runs without console errors", true}}
                                 : std::vector<std::pair<std::string, bool>>{
                                       {"expense can be recorded", true},
                                       {"list shows a running total", true},
                                       {"invalid amount is refused", false},
                                       {"tool runs on a clean checkout", true}}),
                 pt + 120, 170, lat_test);
        sink.add_uncounted(key(id, p, RoleKind::Deployer, PhaseKind::Deployment, {}, 1),
                           deploy_note(proj.snake, 0), lat_test);
    }

    // vmodel ---------------------------------------------------------------
    {
        const ProcessModel p = ProcessModel::VModel;
        sink.add(key(id, p, RoleKind::ProjectManager, PhaseKind::Requirements, {}, 1), prd,
                 pt, ct, lat_doc);
        sink.add(key(id, p, RoleKind::AcceptanceTestExecutor, PhaseKind::Requirements, {}, 1),
                 plan_doc("acceptance").dump(2), pt + 150, 200, lat_test);
        sink.add(key(id, p, RoleKind::Designer, PhaseKind::Design, {}, 1), design, pt + 200,
                 ct - 60, lat_doc);
        sink.add(key(id, p, RoleKind::IntegrationTestExecutor, PhaseKind::Design, {}, 1),
                 plan_doc("integration").dump(2), pt + 260, 180, lat_test);
        sink.add(key(id, p, RoleKind::Developer, PhaseKind::Implementation, {}, 1), bundle,
                 pt + 400, ct + 300, lat_code);
        sink.add(key(id, p, RoleKind::UnitTestExecutor, PhaseKind::Implementation, {}, 1),
                 plan_doc("unit").dump(2), pt + 320, 170, lat_test);

        sink.add(key(id, p, RoleKind::UnitTestExecutor, PhaseKind::UnitTesting, {}, 1),
                 report_json({{"unit case 1", true}, {"unit case 2", true}}), pt, 80,
                 lat_test);
        if (proj.snake && model_b) {
            sink.add(key(id, p, RoleKind::IntegrationTestExecutor,
                         PhaseKind::IntegrationTesting, {}, 1),
                     "Executed the integration plan against the build.\n"
                     "integration case 1 ... PASS\n"
                     "integration case 2 ... FAIL\n",
                     pt, 50, lat_test);
        } else {
            sink.add(key(id, p, RoleKind::IntegrationTestExecutor,
                         PhaseKind::IntegrationTesting, {}, 1),
                     report_json({{"integration case 1", true},
                                  {"integration case 2", !proj.snake}}),
                     pt, 80, lat_test);
        }
        sink.add(key(id, p, RoleKind::AcceptanceTestExecutor, PhaseKind::AcceptanceTesting,
                     {}, 1),
                 report_json({{"acceptance case 1", true}, {"acceptance case 2", true}}),
                 pt + 120, 90, lat_test);
    }

    // agile ------------------------------------------------------------------
    {
        const ProcessModel p = ProcessModel::Agile;
        sink.add(key(id, p, RoleKind::ProjectManager, PhaseKind::Requirements, {}, 1), prd,
                 pt, ct, lat_doc);
        const int sprints = proj.snake ? 3 : 1;
        for (int s = 1; s <= sprints; ++s) {
            Json sprint_plan{
                {"sprint_goal", "Deliver the in-scope backlog items"},
                {"tasks", Json::array({Json{{"owner", "Designer"},
                                            {"task", "design the increment"}},
                                       Json{{"owner", "Developer"},
                                            {"task", "implement the increment"}},
                                       Json{{"owner", "Tester"},
                                            {"task", "test the increment"}}})},
                {"carryover_fixes",
                 s == 2 ? "Fix food respawn and wall wrapping before new work"
                        : "No carried-over cases"}};
            sink.add(key(id, p, RoleKind::SprintManager, PhaseKind::SprintPlanning, s, 1),
                     sprint_plan.dump(2), pt + 80, 160, lat_test);
            sink.add(key(id, p, RoleKind::Designer, PhaseKind::Design, s, 1),
                     design_doc(proj.snake, s).dump(2), pt + 200, ct - 80, lat_doc);

            const char* sprint_bundle =
                proj.snake ? (s == 1 ? (model_b ? kSnakeBundleB : kSnakeBundleA)
                                     : (s == 2 ? kSnakeSprint2 : kSnakeSprint3))
                           : (model_b ? kExpenseBundleB : kExpenseBundleA);
            sink.add(key(id, p, RoleKind::Developer, PhaseKind::Implementation, s, 1),
                     sprint_bundle, pt + 400, ct + 280, lat_code);

            std::vector<std::pair<std::string, bool>> cases;
            if (proj.snake && s == 1) {
                cases = {{"snake moves each tick", true},
                         {"food respawns after pickup", false},
                         {"wall wrapping keeps play alive", false},
                         {"score shows above the board", true}};
            } else if (proj.snake && s == 2) {
                cases = {{"food respawns after pickup", true},
                         {"wall wrapping keeps play alive", true},
                         {"growth matches food eaten", true},
                         {"no reverse turn into the body", true},
                         {"snake moves each tick", true}};
            } else if (proj.snake) {
                cases = {{"score styling is readable", true},
                         {"score updates on pickup", true},
                         {"full game loop stays stable", true},
                         {"page loads without errors", true}};
            } else {
                cases = {{"expense can be recorded", true},
                         {"list shows a running total", true},
                         {"invalid amount is refused", true}};
            }
            sink.add(key(id, p, RoleKind::Tester, PhaseKind::Testing, s, 1),
                     report_json(cases), pt + 150, 130, lat_test);
            sink.add_uncounted(key(id, p, RoleKind::Deployer, PhaseKind::Deployment, s, 1),
                               deploy_note(proj.snake, s), lat_test);
        }
    }
}

std::string run_name(const std::string& project, ProcessModel process,
                     const std::string& model) {
    return project + "__" + swproc::to_string(process) + "__" + model;
}

void emit_manual_sessions(const fs::path& dir) {
    struct Row {
        std::string project;
        ProcessModel process;
        std::string model;
        int failed;  // out of 10
    };
    const std::vector<Row> rows = {
        {"snake_game", ProcessModel::Waterfall, "mock-a", 9},
        {"snake_game", ProcessModel::Waterfall, "mock-b", 8},
        {"snake_game", ProcessModel::VModel, "mock-a", 8},
        {"snake_game", ProcessModel::VModel, "mock-b", 7},
        {"snake_game", ProcessModel::Agile, "mock-a", 2},
        {"snake_game", ProcessModel::Agile, "mock-b", 3},
        {"expense_tracker", ProcessModel::Waterfall, "mock-a", 9},
        {"expense_tracker", ProcessModel::Waterfall, "mock-b", 8},
        {"expense_tracker", ProcessModel::VModel, "mock-a", 8},
        {"expense_tracker", ProcessModel::VModel, "mock-b", 7},
        {"expense_tracker", ProcessModel::Agile, "mock-a", 2},
        {"expense_tracker", ProcessModel::Agile, "mock-b", 3},
    };
    const std::vector<std::string> case_names = {
        "launch the application", "exercise the core flow",   "recover from bad input",
        "verify the happy path",  "stress rapid interaction", "check the displayed totals",
        "restart and retry",      "verify final state",       "review output formatting",
        "close the application"};
    for (const Row& row : rows) {
        const std::string id = run_name(row.project, row.process, row.model);
        Json cases = Json::array();
        for (std::size_t i = 0; i < case_names.size(); ++i) {
            const bool failed = i < static_cast<std::size_t>(row.failed);
            cases.push_back(
                Json{{"name", case_names[i]}, {"verdict", failed ? "Fail" : "Pass"}});
        }
        write_json(dir / (id + ".json"),
                   Json{{"run_id", id}, {"tester_label", "tester-1"}, {"cases", cases}});
    }
}

void emit_issue_reports(const fs::path& dir) {
    Json snake_issues = Json::array(
        {Json{{"path", "script.js"}, {"rule_id", "js/no-unused-vars"}, {"severity", "Smell"}},
         Json{{"path", "script.js"}, {"rule_id", "js/prefer-const"}, {"severity", "Smell"}},
         Json{{"path", "script.js"}, {"rule_id", "js/magic-numbers"}, {"severity", "Smell"}},
         Json{{"path", "index.html"}, {"rule_id", "html/missing-lang"}, {"severity", "Smell"}},
         Json{{"path", "script.js"},
              {"rule_id", "js/prototype-pollution"},
              {"severity", "Vulnerability"}}});
    const std::string snake_run =
        run_name("snake_game", ProcessModel::Waterfall, "mock-a");
    write_json(dir / (snake_run + ".json"),
               Json{{"run_id", snake_run}, {"issues", snake_issues}});

    Json expense_issues = Json::array(
        {Json{{"path", "tracker/store.py"},
              {"rule_id", "py/missing-docstring"},
              {"severity", "Smell"}},
         Json{{"path", "main.py"}, {"rule_id", "py/broad-except"}, {"severity", "Smell"}}});
    const std::string expense_run =
        run_name("expense_tracker", ProcessModel::Agile, "mock-b");
    write_json(dir / (expense_run + ".json"),
               Json{{"run_id", expense_run}, {"issues", expense_issues}});
}

} // namespace

int main(int argc, char** argv) {
    const fs::path dir = argc > 1 ? argv[1] : "fixtures";
    fs::create_directories(dir);

    const std::vector<ProjectNames> projects = {
        {"snake_game", true, "HTML, CSS, and JavaScript"},
        {"expense_tracker", false, "Python"},
    };
    EntrySink mock_a;
    EntrySink mock_b;
    for (const ProjectNames& proj : projects) {
        emit_model(mock_a, proj, false);
        emit_model(mock_b, proj, true);
    }
    write_json(dir / "playback_mock_a.json", Json{{"entries", mock_a.entries}});
    write_json(dir / "playback_mock_b.json", Json{{"entries", mock_b.entries}});

    emit_manual_sessions(dir / "manual");
    emit_issue_reports(dir / "issues");

    std::cout << "fixtures written to " << dir.string() << "\n";
    return 0;
}
