#include "reslift/session.hpp"

#include <map>
#include <string>
#include <variant>

#include "reslift/chain_map.hpp"
#include "reslift/complex.hpp"
#include "reslift/errors.hpp"
#include "reslift/format.hpp"
#include "reslift/groebner.hpp"
#include "reslift/module.hpp"
#include "reslift/residue.hpp"

namespace reslift {

namespace {

using nlohmann::ordered_json;

struct BoundChainMap {
  ChainMap map;
  std::string source;  // name of the source complex
  std::string target;  // name of the target complex
};

using Binding = std::variant<Ideal, PolyMatrix, Complex, BoundChainMap, Homotopy>;

std::vector<std::vector<std::string>> matrix_strings(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_polynomial(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string matrix_text(const PolyMatrix& m) {
  std::vector<std::vector<Polynomial>> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return format_poly_rows(rows);
}

std::string poly_list_text(const std::vector<Polynomial>& polys) {
  return format_poly_list(polys);
}

ordered_json poly_list_json(const std::vector<Polynomial>& polys) {
  ordered_json out = ordered_json::array();
  for (const Polynomial& p : polys) out.push_back(format_polynomial(p));
  return out;
}

std::string int_list_text(const std::vector<int>& xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::string codim_text(const std::optional<int>& c) {
  return c ? std::to_string(*c) : std::string("infinity");
}

ordered_json codim_json(const std::optional<int>& c) {
  if (c) return *c;
  return "infinity";
}

class Runner {
 public:
  Runner(const Session& session, const SessionOptions& options)
      : session_(session), options_(options) {
    result_.ring = session.ring;
  }

  SessionResult run() {
    for (size_t i = 0; i < session_.commands.size(); ++i) {
      const SessionCommand& cmd = session_.commands[i];
      result_.commands.push_back(cmd.text);
      try {
        execute(cmd);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw Error("command " + std::to_string(i + 1) + " (line " + std::to_string(cmd.line) +
                    "): " + e.what());
      }
    }
    return std::move(result_);
  }

 private:
  const Session& session_;
  SessionOptions options_;
  SessionResult result_;
  std::map<std::string, Binding> bindings_;

  template <class T>
  const T& lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw InternalError("unbound name '" + name + "'");
    const T* value = std::get_if<T>(&it->second);
    if (!value) throw InternalError("name '" + name + "' bound to an unexpected kind");
    return *value;
  }

  void bind(const std::string& name, Binding value) {
    if (!bindings_.emplace(name, std::move(value)).second)
      throw InternalError("duplicate binding '" + name + "'");
  }

  void record(const SessionCommand& cmd, std::string text, ordered_json data) {
    result_.outputs.push_back({cmd.text, std::move(text), std::move(data)});
  }

  void require_exact_target(const Complex& target) {
    if (!options_.check_exactness) return;
    ExactnessReport report = buchsbaum_eisenbud_exact(target);
    if (!report.exact) throw DomainError("target complex is not exact");
  }

  void execute(const SessionCommand& cmd) {
    switch (cmd.verb) {
      case Verb::Ring:
        break;  // the parser already installed the ring
      case Verb::IdealDecl:
        bind(cmd.bind, Ideal(session_.ring, cmd.polys));
        break;
      case Verb::MatrixDecl:
        bind(cmd.bind, PolyMatrix::from_rows(session_.ring, cmd.rows));
        break;
      case Verb::Res:
        bind(cmd.bind, free_resolution(lookup<Ideal>(cmd.names[0]), cmd.number));
        break;
      case Verb::Koszul: {
        const Ideal& ideal = lookup<Ideal>(cmd.names[0]);
        bind(cmd.bind, koszul(session_.ring, ideal.generators()));
        break;
      }
      case Verb::Lift:
        run_lift(cmd);
        break;
      case Verb::Homotopy:
        run_homotopy(cmd);
        break;
      case Verb::Fitting:
        bind(cmd.bind, fitting_support(lookup<Complex>(cmd.names[0]), cmd.number));
        break;
      case Verb::Print:
        run_print(cmd);
        break;
      case Verb::CheckExact:
        run_check_exact(cmd);
        break;
      case Verb::CheckCm:
        run_check_cm(cmd);
        break;
      case Verb::Dim:
        run_dim(cmd);
        break;
      case Verb::ResidueReport:
        run_residue_report(cmd);
        break;
      case Verb::JacobianTest:
        run_jacobian_test(cmd);
        break;
    }
  }

  void run_lift(const SessionCommand& cmd) {
    const Complex& source = lookup<Complex>(cmd.names[0]);
    const Complex& target = lookup<Complex>(cmd.names[1]);
    require_exact_target(target);
    PolyMatrix a0(session_.ring, 0, 0);
    if (cmd.names.size() > 2) {
      a0 = lookup<PolyMatrix>(cmd.names[2]);
    } else {
      if (target.rank(0) != source.rank(0))
        throw DomainError("degree-zero block must be given when the end ranks differ");
      a0 = PolyMatrix::identity(session_.ring, target.rank(0));
    }
    ChainMap lifted = lift_morphism(source, target, a0);
    bind(cmd.bind, BoundChainMap{std::move(lifted), cmd.names[0], cmd.names[1]});
  }

  void run_homotopy(const SessionCommand& cmd) {
    const BoundChainMap& a = lookup<BoundChainMap>(cmd.names[0]);
    const BoundChainMap& b = lookup<BoundChainMap>(cmd.names[1]);
    if (a.source != b.source || a.target != b.target)
      throw DomainError("chain maps have different source or target");
    const Complex& source = lookup<Complex>(a.source);
    const Complex& target = lookup<Complex>(a.target);
    bind(cmd.bind, homotopy_between(source, target, a.map, b.map));
  }

  void print_blocks(const SessionCommand& cmd, const std::string& kind,
                    const std::vector<PolyMatrix>& blocks, const std::string& label) {
    std::string text;
    ordered_json array = ordered_json::array();
    for (size_t k = 0; k < blocks.size(); ++k) {
      text += label + "_" + std::to_string(k) + " = " + matrix_text(blocks[k]) + "\n";
      array.push_back(matrix_strings(blocks[k]));
    }
    ordered_json data;
    data["kind"] = kind;
    data["name"] = cmd.names[0];
    data["blocks"] = std::move(array);
    record(cmd, std::move(text), std::move(data));
  }

  void run_print(const SessionCommand& cmd) {
    const std::string& name = cmd.names[0];
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw InternalError("unbound name '" + name + "'");
    const Binding& binding = it->second;
    if (const Ideal* ideal = std::get_if<Ideal>(&binding)) {
      ordered_json data;
      data["kind"] = "ideal";
      data["name"] = name;
      data["generators"] = poly_list_json(ideal->generators());
      record(cmd, name + " = " + poly_list_text(ideal->generators()) + "\n", std::move(data));
    } else if (const PolyMatrix* matrix = std::get_if<PolyMatrix>(&binding)) {
      ordered_json data;
      data["kind"] = "matrix";
      data["name"] = name;
      data["entries"] = matrix_strings(*matrix);
      record(cmd, name + " = " + matrix_text(*matrix) + "\n", std::move(data));
    } else if (const Complex* complex = std::get_if<Complex>(&binding)) {
      std::string text = name + ": ranks " + int_list_text(complex->ranks()) + "\n";
      ordered_json maps = ordered_json::array();
      for (int k = 1; k <= complex->length(); ++k) {
        text += "phi_" + std::to_string(k) + " = " + matrix_text(complex->map(k)) + "\n";
        maps.push_back(matrix_strings(complex->map(k)));
      }
      ordered_json data;
      data["kind"] = "complex";
      data["name"] = name;
      data["ranks"] = complex->ranks();
      data["maps"] = std::move(maps);
      record(cmd, std::move(text), std::move(data));
    } else if (const BoundChainMap* cm = std::get_if<BoundChainMap>(&binding)) {
      print_blocks(cmd, "chain-map", cm->map.blocks, name);
    } else if (const Homotopy* homotopy = std::get_if<Homotopy>(&binding)) {
      print_blocks(cmd, "homotopy", homotopy->blocks, name);
    } else {
      throw InternalError("unknown binding kind");
    }
  }

  void run_check_exact(const SessionCommand& cmd) {
    const Complex& complex = lookup<Complex>(cmd.names[0]);
    ExactnessReport report = buchsbaum_eisenbud_exact(complex);
    std::string codims = "[";
    ordered_json codims_json = ordered_json::array();
    for (size_t k = 0; k < report.codims.size(); ++k) {
      if (k > 0) codims += ", ";
      codims += codim_text(report.codims[k]);
      codims_json.push_back(codim_json(report.codims[k]));
    }
    codims += "]";
    std::string text = std::string("exact: ") + (report.exact ? "true" : "false") +
                       " (expected ranks " + int_list_text(report.expected) +
                       ", fitting codims " + codims + ")\n";
    ordered_json data;
    data["kind"] = "exactness";
    data["name"] = cmd.names[0];
    data["expected_ranks"] = report.expected;
    data["fitting_codims"] = std::move(codims_json);
    data["exact"] = report.exact;
    record(cmd, std::move(text), std::move(data));
  }

  void run_check_cm(const SessionCommand& cmd) {
    const Ideal& ideal = lookup<Ideal>(cmd.names[0]);
    CmReport report = cohen_macaulay_check(ideal);
    std::string text = std::string("CM: ") + (report.cohen_macaulay ? "true" : "false") + " (length " +
                       std::to_string(report.length) +
                       (report.cohen_macaulay ? " = codim " : " != codim ") +
                       codim_text(report.codim) + ")\n";
    ordered_json data;
    data["kind"] = "cohen-macaulay";
    data["name"] = cmd.names[0];
    data["length"] = report.length;
    data["codim"] = codim_json(report.codim);
    data["cohen_macaulay"] = report.cohen_macaulay;
    record(cmd, std::move(text), std::move(data));
  }

  void run_dim(const SessionCommand& cmd) {
    const Ideal& ideal = lookup<Ideal>(cmd.names[0]);
    int dim = dimension(ideal);
    ordered_json data;
    data["kind"] = "dimension";
    data["name"] = cmd.names[0];
    data["dimension"] = dim;
    record(cmd, "dim " + cmd.names[0] + " = " + std::to_string(dim) + "\n", std::move(data));
  }

  void run_residue_report(const SessionCommand& cmd) {
    const Ideal& tuple_ideal = lookup<Ideal>(cmd.names[0]);
    const Ideal& target = lookup<Ideal>(cmd.names[1]);
    if (options_.check_exactness) {
      ExactnessReport report = buchsbaum_eisenbud_exact(free_resolution(target));
      if (!report.exact) throw DomainError("target complex is not exact");
    }
    ResidueReport report = transformation_report(tuple_ideal.generators(), target);

    std::string text;
    for (size_t i = report.tuple.size(); i-- > 0;)
      text += "dbar(1/(" + format_polynomial(report.tuple[i]) + ")) ^ ";
    std::vector<std::vector<Polynomial>> column;
    for (const Polynomial& c : report.coefficients) column.push_back({c});
    text += format_poly_rows(column);
    text += "  (mod " + poly_list_text(report.congruence.generators()) + ")\n";

    ordered_json data;
    data["kind"] = "residue";
    data["tuple"] = poly_list_json(report.tuple);
    data["coefficients"] = poly_list_json(report.coefficients);
    data["target_ranks"] = report.target_ranks;
    data["congruence"] = poly_list_json(report.congruence.generators());
    record(cmd, std::move(text), std::move(data));
  }

  void run_jacobian_test(const SessionCommand& cmd) {
    HickelVerdict verdict = hickel_test(cmd.polys);
    std::string text = "jacobian = " + format_polynomial(verdict.jacobian) +
                       ", codim = " + std::to_string(verdict.codim) +
                       ", member = " + (verdict.member ? "true" : "false");
    if (verdict.member) text += ", certificate = " + poly_list_text(verdict.certificate);
    text += "\n";
    ordered_json data;
    data["kind"] = "jacobian";
    data["jacobian"] = format_polynomial(verdict.jacobian);
    data["codim"] = verdict.codim;
    data["member"] = verdict.member;
    data["certificate"] = poly_list_json(verdict.certificate);
    record(cmd, std::move(text), std::move(data));
  }
};

}  // namespace

SessionResult run_session(const Session& session, const SessionOptions& options) {
  return Runner(session, options).run();
}

std::string emit_text(const SessionResult& result) {
  std::string out;
  for (const OutputRecord& record : result.outputs) out += record.text;
  return out;
}

std::string emit_json(const SessionResult& result) {
  ordered_json doc;
  if (result.ring) {
    doc["ring"]["variables"] = result.ring->vars();
    doc["ring"]["order"] = result.ring->order().str();
  } else {
    doc["ring"] = nullptr;  // session had no statements at all
  }
  doc["commands"] = result.commands;
  doc["outputs"] = ordered_json::array();
  for (const OutputRecord& record : result.outputs) {
    ordered_json entry;
    entry["command"] = record.command;
    for (auto it = record.data.begin(); it != record.data.end(); ++it) entry[it.key()] = it.value();
    doc["outputs"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace reslift
