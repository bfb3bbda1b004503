#include "platoon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace platoon {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

double number_field(const json& obj, const char* key, const char* what,
                    std::optional<double> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  }
  if (!obj[key].is_number())
    throw ParseError(std::string(what) + ": field '" + key + "' must be a number");
  return obj[key].get<double>();
}

int int_field(const json& obj, const char* key, const char* what) {
  if (!obj.contains(key))
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  if (!obj[key].is_number_integer())
    throw ParseError(std::string(what) + ": field '" + key + "' must be an integer");
  return obj[key].get<int>();
}

std::string string_field(const json& obj, const char* key, const char* what) {
  if (!obj.contains(key))
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  if (!obj[key].is_string())
    throw ParseError(std::string(what) + ": field '" + key + "' must be a string");
  return obj[key].get<std::string>();
}

PlatoonState state_from_json(const json& doc, const char* what) {
  if (!doc.is_object()) throw ParseError(std::string(what) + ": not an object");
  GridSpec spec;
  spec.rows = int_field(doc, "rows", what);
  spec.cols = int_field(doc, "cols", what);
  spec.cell_length_m = number_field(doc, "cell_length_m", what, 7.0);
  spec.lane_width_m = number_field(doc, "lane_width_m", what, 3.5);
  if (!doc.contains("vehicles") || !doc["vehicles"].is_array())
    throw ParseError(std::string(what) + ": missing 'vehicles' array");
  std::vector<std::pair<Vehicle, int>> placements;
  int line = 0;
  for (const json& v : doc["vehicles"]) {
    ++line;
    const std::string ctx = std::string(what) + ", vehicle #" + std::to_string(line);
    Vehicle veh;
    veh.id = string_field(v, "id", ctx.c_str());
    veh.move_class = v.contains("class") ? string_field(v, "class", ctx.c_str()) : "";
    veh.rel_speed = number_field(v, "speed_mps", ctx.c_str(), 0.0);
    placements.emplace_back(std::move(veh), int_field(v, "pos", ctx.c_str()));
  }
  return PlatoonState(spec, placements);
}

json state_to_json(const PlatoonState& state) {
  json doc;
  doc["rows"] = state.spec().rows;
  doc["cols"] = state.spec().cols;
  doc["cell_length_m"] = state.spec().cell_length_m;
  doc["lane_width_m"] = state.spec().lane_width_m;
  json vehicles = json::array();
  for (int i = 0; i < state.vehicle_count(); ++i) {
    json v;
    v["id"] = state.vehicle(i).id;
    v["class"] = state.vehicle(i).move_class;
    v["speed_mps"] = state.speed_of(i);
    v["pos"] = state.cell_of(i);
    vehicles.push_back(std::move(v));
  }
  doc["vehicles"] = std::move(vehicles);
  return doc;
}

std::map<std::string, int> id_cell_map(const json& obj, const char* what) {
  if (!obj.is_object())
    throw ParseError(std::string(what) + ": expected an id -> cell object");
  std::map<std::string, int> out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!it.value().is_number_integer())
      throw ParseError(std::string(what) + ": cell for '" + it.key() +
                       "' must be an integer");
    out[it.key()] = it.value().get<int>();
  }
  return out;
}

}  // namespace

PlatoonState parse_instance(const std::string& text) {
  return state_from_json(parse_json(text, "instance"), "instance");
}

std::string serialize_instance(const PlatoonState& state) {
  return state_to_json(state).dump(2) + "\n";
}

GoalSpec parse_goal(const std::string& text, const PlatoonState& reference) {
  const json doc = parse_json(text, "goal");
  if (!doc.is_object()) throw ParseError("goal: not an object");

  if (doc.contains("paired"))
    return GoalSpec::paired(reference, id_cell_map(doc["paired"], "goal.paired"));

  if (doc.contains("template")) {
    const json& tj = doc["template"];
    if (!tj.is_object() || !tj.contains("row_sets") || !tj["row_sets"].is_array())
      throw ParseError("goal.template: missing 'row_sets' array");
    std::vector<RowSet> row_sets;
    for (const json& rs : tj["row_sets"]) {
      RowSet out;
      out.vehicle_class = string_field(rs, "class", "goal.template.row_sets");
      if (!rs.contains("rows") || !rs["rows"].is_array())
        throw ParseError("goal.template.row_sets: missing 'rows' array");
      for (const json& r : rs["rows"]) {
        if (!r.is_number_integer())
          throw ParseError("goal.template.row_sets: rows must be integers");
        out.rows.push_back(r.get<int>());
      }
      row_sets.push_back(std::move(out));
    }
    return GoalSpec::from_template(reference, row_sets);
  }

  if (doc.contains("goal_states")) {
    if (!doc["goal_states"].is_array())
      throw ParseError("goal.goal_states: expected an array");
    std::vector<PlatoonState> states;
    std::vector<double> zeros(static_cast<size_t>(reference.vehicle_count()), 0.0);
    int line = 0;
    for (const json& gj : doc["goal_states"]) {
      ++line;
      const std::string ctx = "goal.goal_states #" + std::to_string(line);
      auto targets = id_cell_map(gj, ctx.c_str());
      if (static_cast<int>(targets.size()) != reference.vehicle_count())
        throw ParseError(ctx + ": must target every vehicle exactly once");
      std::vector<int> cells(static_cast<size_t>(reference.vehicle_count()), 0);
      for (const auto& [id, cell] : targets) {
        auto idx = reference.index_of(id);
        if (!idx) throw ParseError(ctx + ": unknown vehicle '" + id + "'");
        cells[static_cast<size_t>(*idx)] = cell;
      }
      states.push_back(reference.with_occupancy(cells, zeros));
    }
    std::vector<double> weights;
    if (doc.contains("weights")) {
      if (!doc["weights"].is_array())
        throw ParseError("goal.weights: expected an array");
      for (const json& w : doc["weights"]) {
        if (!w.is_number()) throw ParseError("goal.weights: must be numbers");
        weights.push_back(w.get<double>());
      }
    }
    return GoalSpec::from_states(std::move(states), std::move(weights));
  }

  throw ParseError("goal: expected one of 'paired', 'template', 'goal_states'");
}

std::string serialize_goal(const GoalSpec& goals) {
  json doc;
  json states = json::array();
  for (const PlatoonState& g : goals.states()) {
    json m;
    for (int i = 0; i < g.vehicle_count(); ++i) m[g.vehicle(i).id] = g.cell_of(i);
    states.push_back(std::move(m));
  }
  doc["goal_states"] = std::move(states);
  doc["weights"] = goals.weights();
  return doc.dump(2) + "\n";
}

PathDocument parse_path(const std::string& text) {
  const json doc = parse_json(text, "path");
  if (!doc.is_object() || !doc.contains("instance"))
    throw ParseError("path: missing 'instance'");
  PathDocument out;
  out.initial = state_from_json(doc["instance"], "path.instance");
  if (!doc.contains("moves") || !doc["moves"].is_array())
    throw ParseError("path: missing 'moves' array");
  int line = 0;
  for (const json& mj : doc["moves"]) {
    ++line;
    const std::string ctx = "path.moves #" + std::to_string(line);
    Move m;
    m.vehicle = string_field(mj, "vehicle", ctx.c_str());
    m.from_cell = int_field(mj, "from", ctx.c_str());
    m.to_cell = int_field(mj, "to", ctx.c_str());
    m.kind = classify_move(out.initial.spec(), m.from_cell, m.to_cell);
    out.moves.push_back(std::move(m));
  }
  out.total_cost = number_field(doc, "total_cost", "path", 0.0);
  out.chosen_goal = doc.contains("chosen_goal") ? int_field(doc, "chosen_goal", "path") : -1;
  return out;
}

std::string serialize_path(const PlatoonState& initial, const SortingPath& path) {
  json doc;
  doc["instance"] = state_to_json(initial);
  json moves = json::array();
  for (const Move& m : path.moves) {
    json mj;
    mj["vehicle"] = m.vehicle;
    mj["from"] = m.from_cell;
    mj["to"] = m.to_cell;
    moves.push_back(std::move(mj));
  }
  doc["moves"] = std::move(moves);
  doc["total_cost"] = path.total_cost;
  doc["chosen_goal"] = path.chosen_goal;
  return doc.dump(2) + "\n";
}

SortingPath replay_path(const PathDocument& doc, const CostParams& params) {
  SortingPath path;
  path.states.push_back(doc.initial);
  path.total_cost = 0.0;
  for (const Move& m : doc.moves) {
    const PlatoonState& cur = path.states.back();
    path.total_cost += edge_cost_for_move(cur, m, params);
    path.states.push_back(apply_move(cur, m, params));
    path.moves.push_back(m);
  }
  path.chosen_goal = doc.chosen_goal;
  return path;
}

CostParams parse_params(const std::string& text, CostParams base) {
  const json doc = parse_json(text, "params");
  if (!doc.is_object()) throw ParseError("params: not an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (!it.value().is_number())
      throw ParseError("params: field '" + key + "' must be a number");
    const double v = it.value().get<double>();
    if (key == "beta_long") base.beta_long = v;
    else if (key == "beta_lc") base.beta_lc = v;
    else if (key == "gamma") base.gamma = v;
    else if (key == "a_max_accel") base.a_max_accel = v;
    else if (key == "a_min_decel") base.a_min_decel = v;
    else if (key == "cell_length_m") base.cell_length_m = v;
    else if (key == "cruise_speed_mps") base.cruise_speed_mps = v;
    else throw ParseError("params: unknown field '" + key + "'");
  }
  base.validate();
  return base;
}

std::string schedule_to_csv(const Schedule& schedule) {
  std::ostringstream out;
  out << "move,vehicle,from,to,step\n";
  for (size_t i = 0; i < schedule.moves.size(); ++i) {
    const MoveRecord& m = schedule.moves[i];
    out << m.seq << ',' << m.vehicle << ',' << m.from_pos << ',' << m.to_pos
        << ',' << schedule.step[i] << '\n';
  }
  return out.str();
}

Schedule parse_schedule_csv(const std::string& text, ScheduleMode mode) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("move,vehicle,from,to,step", 0) != 0)
    throw ParseError("schedule csv: missing header");
  std::vector<MoveRecord> moves;
  std::vector<int> steps;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 5)
      throw ParseError("schedule csv line " + std::to_string(lineno) +
                       ": expected 5 fields");
    try {
      moves.push_back(MoveRecord{fields[1], std::stoi(fields[2]),
                                 std::stoi(fields[3]), std::stoi(fields[0])});
      steps.push_back(std::stoi(fields[4]));
    } catch (const std::exception&) {
      throw ParseError("schedule csv line " + std::to_string(lineno) +
                       ": bad number");
    }
  }
  Schedule sched;
  sched.moves = std::move(moves);
  sched.step = std::move(steps);
  sched.mode = mode;
  std::map<std::string, int> final_step;
  for (size_t i = 0; i < sched.moves.size(); ++i) {
    sched.makespan = std::max(sched.makespan, sched.step[i]);
    final_step[sched.moves[i].vehicle] = sched.step[i];
  }
  for (const auto& [veh, s] : final_step) sched.objective += s;
  return sched;
}

std::string stats_to_json(const SearchStats& stats, SearchStatus status,
                          double cost) {
  json doc;
  doc["status"] = to_string(status);
  doc["cost"] = cost;
  doc["explored"] = stats.explored;
  doc["generated"] = stats.generated;
  doc["reopened"] = stats.reopened;
  doc["elapsed_s"] = stats.elapsed_s;
  doc["f_initial"] = stats.f_initial;
  doc["f_final"] = stats.f_final;
  return doc.dump(2) + "\n";
}

std::string summary_to_json(const PortfolioSummary& summary,
                            const PortfolioResult& result) {
  json doc;
  doc["runs"] = summary.runs;
  doc["successes"] = summary.successes;
  doc["timeouts"] = summary.timeouts;
  doc["distinct_paths"] = summary.distinct_paths;
  doc["min_elapsed_s"] = summary.min_elapsed_s;
  doc["max_elapsed_s"] = summary.max_elapsed_s;
  doc["mean_elapsed_s"] = summary.mean_elapsed_s;
  json modes;
  for (const auto& [mode, ms] : summary.modes) {
    json mj;
    mj["best_makespan"] = ms.best_makespan;
    mj["k_star"] = ms.k_star;
    json hist;
    for (const auto& [mk, count] : ms.makespan_hist)
      hist[std::to_string(mk)] = count;
    mj["makespan_hist"] = std::move(hist);
    mj["prob_best_by_k"] = ms.prob_best_by_k;
    modes[to_string(mode)] = std::move(mj);
  }
  doc["modes"] = std::move(modes);
  doc["best"]["mode"] = to_string(result.best.mode);
  doc["best"]["makespan"] = result.best.schedule.makespan;
  doc["best"]["objective"] = result.best.schedule.objective;
  doc["best"]["cost"] = result.best.path.total_cost;
  doc["best"]["moves"] = move_sequence_key(result.best.path.moves);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SortError("cannot write file '" + path + "'");
  out << content;
}

}  // namespace platoon
