#include "CLI11.hpp"

#include "equiv.hpp"
#include "genus2.hpp"
#include "report.hpp"
#include "semistable.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hyc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AnalysisError(1, "cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Json& j, const std::string& format) {
  if (format == "text")
    std::cout << render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

AnalysisInput require_semistable(const std::string& file) {
  AnalysisInput in = load_input(slurp(file));
  auto ss = check_semistability(in.picture, in.galois);
  if (!ss.semistable)
    throw AnalysisError(2, "input is not semistable: " + ss.witnesses[0]);
  return in;
}

Json move_json(const Move& mv) {
  Json j;
  switch (mv.kind) {
    case Move::Shift:
      j["kind"] = "shift";
      j["amount"] = show_rational(mv.amount);
      break;
    case Move::AddRoot:
      j["kind"] = "add_root";
      break;
    case Move::RemoveRoot:
      j["kind"] = "remove_root";
      j["root"] = mv.root;
      break;
    case Move::Redistribute: {
      j["kind"] = "redistribute";
      std::string mem;
      for (size_t i = 0; i < mv.cluster.size(); ++i)
        mem += (i ? "," : "") + std::to_string(mv.cluster[i]);
      j["cluster"] = mem;
      j["amount"] = show_rational(mv.amount);
      break;
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster pictures and arithmetic invariants of hyperelliptic curves "
               "over local fields of odd residue characteristic"};
  app.require_subcommand(1);

  std::string file, file2, format = "json";
  bool dot = false, strict = false;

  auto add_common = [&](CLI::App* sub, bool two_files = false) {
    sub->add_option("input", file, "input JSON file")->required();
    if (two_files) sub->add_option("input2", file2, "second input")->required();
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--strict", strict, "reject attested (underived) tameness");
  };

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  add_common(analyze);
  auto* graph = app.add_subcommand("graph", "dual graph of the special fibre");
  add_common(graph);
  graph->add_flag("--dot", dot, "emit DOT instead of JSON");
  auto* classify = app.add_subcommand("classify", "genus 2 reduction type");
  add_common(classify);
  auto* balance = app.add_subcommand("balance", "balanced form and move list");
  add_common(balance);
  auto* checkss = app.add_subcommand("check-semistable", "semistability verdict");
  add_common(checkss);
  auto* equiv = app.add_subcommand("equivalent", "compare two pictures");
  add_common(equiv, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      emit(analyze_report(load_input(slurp(file)), strict), format);
    } else if (graph->parsed()) {
      AnalysisInput in = require_semistable(file);
      if (dot) {
        std::cout << emit_dot(dual_graph(in.picture, in.galois), in.picture);
      } else {
        Json rep = analyze_report(in, strict);
        Json out;
        out["dual_graph"] = rep["dual_graph"];
        out["components"] = rep["components"];
        emit(out, format);
      }
    } else if (classify->parsed()) {
      AnalysisInput in = require_semistable(file);
      Json out;
      try {
        auto t = classify_genus2(in.picture, in.galois);
        out["reduction_type"] = t.label();
        auto ti = table_invariants(t);
        out["components"] = (long long)ti.components;
        out["conductor"] = ti.conductor;
        out["root_number"] = ti.root_number;
        out["tamagawa"] = (long long)ti.tamagawa;
        out["deficient"] = ti.deficient;
        out["min_disc_valuation"] = (long long)ti.min_disc;
      } catch (const std::invalid_argument& e) {
        throw AnalysisError(2, e.what());
      }
      emit(out, format);
    } else if (balance->parsed()) {
      AnalysisInput in = load_input(slurp(file));
      auto res = hyc::balance(in.picture);
      Json out;
      out["balanced"] = serialize_picture(res.picture);
      out["moves"] = Json::array();
      for (const auto& mv : res.moves) out["moves"].push_back(move_json(mv));
      emit(out, format);
    } else if (checkss->parsed()) {
      AnalysisInput in = load_input(slurp(file));
      auto ss = check_semistability(in.picture, in.galois);
      Json out;
      out["semistable"] = ss.semistable;
      out["witnesses"] = ss.witnesses;
      emit(out, format);
      if (!ss.semistable) return 2;
    } else if (equiv->parsed()) {
      AnalysisInput a = load_input(slurp(file));
      AnalysisInput b = load_input(slurp(file2));
      Json out;
      out["equivalent"] = equivalent(a.picture, b.picture);
      emit(out, format);
    }
  } catch (const AnalysisError& e) {
    std::cout << error_object(e).dump(2) << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cout << error_object(AnalysisError(2, e.what())).dump(2) << "\n";
    return 2;
  }
  return 0;
}
