// Copyright 2026 The sysfiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sysf/engine.hpp"
#include "sysf/formula.hpp"
#include "sysf/game.hpp"
#include "sysf/hyperforest.hpp"
#include "sysf/iso.hpp"
#include "sysf/term.hpp"
#include "sysf/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Options {
  bool json = false;
  bool church = false;
  int depth = 4;
  sysf::Bounds bounds;
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_iso(const Options& opt, const std::string& ta, const std::string& tb) {
  sysf::Formula a = sysf::parse_formula(ta);
  sysf::Formula b = sysf::parse_formula(tb);
  bool iso = sysf::decide_iso(a, b);
  if (opt.church) {
    bool other = sysf::decide_iso_church_route(a, b);
    if (other != iso) {
      std::cerr << "internal error: decision routes disagree (curry " << iso
                << ", church " << other << ")\n";
      return kError;
    }
  }
  emit(opt, json{{"iso", iso}}, iso ? "iso\n" : "not-iso\n");
  return iso ? kYes : kNo;
}

int cmd_nf(const Options& opt, const std::string& t) {
  std::string nf = sysf::to_string(sysf::normalize(sysf::parse_formula(t)));
  emit(opt, json{{"nf", nf}}, nf + "\n");
  return kYes;
}

int cmd_game(const std::string& t) {
  std::cout << json::parse(sysf::game_json(sysf::game_of_formula(sysf::parse_formula(t))))
                   .dump(2)
            << "\n";
  return kYes;
}

int cmd_forest(const std::string& t) {
  sysf::Hyperforest h = sysf::hyperforest_of_formula(sysf::parse_formula(t));
  std::cout << json::parse(sysf::forest_json(h)).dump(2) << "\n";
  return kYes;
}

struct Entry {
  std::string name;
  sysf::Formula type;
};

std::vector<Entry> read_signature(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::vector<Entry> out;
  std::set<std::string> seen;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error(file + ":" + std::to_string(no) + ": expected `name : type`");
    std::string name = line.substr(0, colon);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty())
      throw std::runtime_error(file + ":" + std::to_string(no) + ": empty name");
    if (!seen.insert(name).second)
      throw std::runtime_error(file + ":" + std::to_string(no) + ": duplicate name " + name);
    try {
      out.push_back({name, sysf::parse_formula(line.substr(colon + 1))});
    } catch (const std::exception& e) {
      throw std::runtime_error(file + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

int cmd_search(const Options& opt, const std::string& query, const std::string& file) {
  sysf::Formula q = sysf::parse_formula(query);
  json hits = json::array();
  std::string text;
  for (const auto& e : read_signature(file)) {
    if (!sysf::decide_iso(q, e.type)) continue;
    hits.push_back({{"name", e.name}, {"type", sysf::to_string(e.type)}});
    text += e.name + " : " + sysf::to_string(e.type) + "\n";
  }
  emit(opt, json{{"matches", hits}}, text);
  return hits.empty() ? kNo : kYes;
}

json report_json(const sysf::WitnessReport& r) {
  json j{{"found", r.found}, {"inconclusive", r.inconclusive}};
  if (r.found) {
    j["trace"] = json::parse(sysf::trace_json(r.trace));
    j["forward"] = sysf::to_string(*r.forward);
    j["backward"] = sysf::to_string(*r.backward);
  }
  if (!r.checks.empty()) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
  }
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

std::string report_text(const sysf::WitnessReport& r) {
  std::ostringstream out;
  if (!r.found) {
    out << "inconclusive";
    if (!r.diagnostic.empty()) out << ": " << r.diagnostic;
    out << "\n";
    return out.str();
  }
  out << "trace (" << r.trace.size() << (r.trace.size() == 1 ? " step" : " steps") << ")\n";
  for (const auto& s : r.trace)
    out << "  axiom " << s.axiom << " " << sysf::dir_string(s.dir) << " at '" << s.path
        << "' -> " << sysf::to_string(s.result) << "\n";
  out << "forward:  " << sysf::to_string(*r.forward) << "\n";
  out << "backward: " << sysf::to_string(*r.backward) << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "pass " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (r.inconclusive) out << "inconclusive: " << r.diagnostic << "\n";
  return out.str();
}

int cmd_witness(const Options& opt, const std::string& ta, const std::string& tb,
                bool verify) {
  sysf::Formula a = sysf::parse_formula(ta);
  sysf::Formula b = sysf::parse_formula(tb);
  sysf::WitnessReport r = verify ? sysf::verify_witness(a, b, opt.depth, opt.bounds)
                                 : sysf::find_witness(a, b, opt.depth);
  emit(opt, report_json(r), report_text(r));
  if (!r.found || r.inconclusive) return kError;
  return r.all_pass() ? kYes : kNo;
}

int cmd_eval(const Options& opt, const std::string& ta, const std::string& tb) {
  sysf::Strategy s = sysf::interpret({}, sysf::parse_term(ta), opt.bounds);
  sysf::Strategy t = sysf::interpret({}, sysf::parse_term(tb), opt.bounds);
  sysf::EqualResult r = sysf::equal_bounded(s, t, opt.bounds);
  json j{{"equal", r.equal}, {"plays", r.plays}};
  std::string text = r.equal ? "equal\n" : "not-equal\n";
  if (r.divergence) {
    j["divergence"] = sysf::describe(*r.divergence);
    text += sysf::describe(*r.divergence);
    if (text.back() != '\n') text += "\n";
  }
  emit(opt, j, text);
  return r.equal ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type isomorphism for Curry-style System F"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");

  std::string ta, tb, file;
  auto* iso = app.add_subcommand("iso", "Decide whether two types are isomorphic");
  iso->add_option("A", ta)->required();
  iso->add_option("B", tb)->required();
  iso->add_flag("--church", opt.church, "Cross-check with the normalize+Church route");

  auto* nf = app.add_subcommand("nf", "Print the normal form of a type");
  nf->add_option("A", ta)->required();
  auto* game = app.add_subcommand("game", "Print the game of a type as JSON");
  game->add_option("A", ta)->required();
  auto* forest = app.add_subcommand("forest", "Print the hyperforest of a type as JSON");
  forest->add_option("A", ta)->required();

  auto* search = app.add_subcommand("search", "List signature entries isomorphic to a type");
  search->add_option("A", ta)->required();
  search->add_option("FILE", file)->required();

  auto* witness = app.add_subcommand("witness", "Find a rewrite trace and witness terms");
  witness->add_option("A", ta)->required();
  witness->add_option("B", tb)->required();
  witness->add_option("--depth", opt.depth, "Trace search depth")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Find witnesses and check them in the engine");
  verify->add_option("A", ta)->required();
  verify->add_option("B", tb)->required();
  verify->add_option("--depth", opt.depth, "Trace search depth")->check(CLI::NonNegativeNumber);

  auto* eval = app.add_subcommand("eval", "Compare two closed terms in the engine");
  eval->add_option("T", ta)->required();
  eval->add_option("U", tb)->required();

  for (auto* sub : {verify, eval}) {
    sub->add_option("--max-play-len", opt.bounds.max_play_len)->check(CLI::PositiveNumber);
    sub->add_option("--max-token-len", opt.bounds.max_token_len)->check(CLI::NonNegativeNumber);
    sub->add_option("--max-leaf", opt.bounds.max_leaf)->check(CLI::NonNegativeNumber);
    sub->add_option("--fuel", opt.bounds.interaction_fuel)->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kYes : kError;
  }

  try {
    if (*iso) return cmd_iso(opt, ta, tb);
    if (*nf) return cmd_nf(opt, ta);
    if (*game) return cmd_game(ta);
    if (*forest) return cmd_forest(ta);
    if (*search) return cmd_search(opt, ta, file);
    if (*witness) return cmd_witness(opt, ta, tb, false);
    if (*verify) return cmd_witness(opt, ta, tb, true);
    if (*eval) return cmd_eval(opt, ta, tb);
  } catch (const sysf::FuelExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
