#pragma once

// Task-set documents are JSON:
//
//   {
//     "tasks": [
//       {"name": "tau1", "offset": 0,
//        "configs": [{"c": 1, "d": 2, "t": 2}, {"c": 2, "d": 5, "t": 5}]},
//       {"name": "tau2", "configs": [{"c": 1, "d": 3, "t": 3}]}
//     ]
//   }
//
// Array order is priority order (first = highest) and configuration order.
// "offset" is optional and defaults to 0. Unknown keys are rejected.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncgmf/task_model.hpp"

namespace ncgmf {

// Malformed document syntax. `position` is the byte offset reported by the
// JSON reader.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj,
                                std::initializer_list<std::string_view> allowed,
                                const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::ranges::find(allowed, key) == allowed.end())
      throw ValidationError(where + ": unknown key '" + key + "'");
  }
}

inline std::int64_t integer_field(const nlohmann::json& obj, const char* key,
                                  const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ValidationError(where + ": missing field '" + key + "'");
  if (!it->is_number_integer())
    throw ValidationError(where + ": field '" + key + "' must be an integer");
  return it->get<std::int64_t>();
}

}  // namespace detail

inline TaskSet taskset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("document must be an object");
  detail::reject_unknown_keys(doc, {"tasks"}, "document");
  auto tasks_it = doc.find("tasks");
  if (tasks_it == doc.end() || !tasks_it->is_array())
    throw ValidationError("document: 'tasks' must be an array");

  std::vector<Task> tasks;
  std::size_t index = 0;
  for (const auto& jt : *tasks_it) {
    const auto where = "task #" + std::to_string(++index);
    if (!jt.is_object()) throw ValidationError(where + ": must be an object");
    detail::reject_unknown_keys(jt, {"name", "offset", "configs"}, where);
    auto name_it = jt.find("name");
    if (name_it == jt.end() || !name_it->is_string())
      throw ValidationError(where + ": 'name' must be a string");
    Time offset = jt.contains("offset")
                      ? detail::integer_field(jt, "offset", where)
                      : 0;
    auto cfgs_it = jt.find("configs");
    if (cfgs_it == jt.end() || !cfgs_it->is_array())
      throw ValidationError(where + ": 'configs' must be an array");

    std::vector<TaskConfig> configs;
    for (const auto& jc : *cfgs_it) {
      const auto cwhere = where + " config #" + std::to_string(configs.size() + 1);
      if (!jc.is_object()) throw ValidationError(cwhere + ": must be an object");
      detail::reject_unknown_keys(jc, {"c", "d", "t"}, cwhere);
      configs.push_back({detail::integer_field(jc, "c", cwhere),
                         detail::integer_field(jc, "d", cwhere),
                         detail::integer_field(jc, "t", cwhere)});
    }
    tasks.emplace_back(name_it->get<std::string>(), std::move(configs), offset);
  }
  return TaskSet(std::move(tasks));
}

inline TaskSet parse_taskset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  return taskset_from_json(doc);
}

inline TaskSet load_taskset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_taskset(buf.str());
}

inline nlohmann::json to_json(const TaskSet& ts) {
  auto tasks = nlohmann::json::array();
  for (const auto& task : ts.tasks()) {
    auto configs = nlohmann::json::array();
    for (const auto& cfg : task.configs())
      configs.push_back({{"c", cfg.c}, {"d", cfg.d}, {"t", cfg.t}});
    tasks.push_back(
        {{"name", task.name()}, {"offset", task.offset()}, {"configs", configs}});
  }
  return {{"tasks", tasks}};
}

inline std::string serialize_taskset(const TaskSet& ts) {
  return to_json(ts).dump(2) + "\n";
}

}  // namespace ncgmf
