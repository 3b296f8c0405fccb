#pragma once

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "foliakit/classification.hpp"
#include "foliakit/diagram.hpp"
#include "foliakit/dual_graph.hpp"
#include "foliakit/manifold_parse.hpp"
#include "foliakit/report.hpp"
#include "json.hpp"

namespace foliakit::cli {

enum ExitCode : int { Ok = 0, Internal = 1, InputError = 2, ContextError = 3 };

class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An argument naming an existing file is read; anything else is taken as the
// text itself.
inline std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

inline void emit(std::ostream& out, const Report& r, bool json) {
  if (json) {
    out << nlohmann::json(r).dump(2) << "\n";
  } else {
    out << render_text(r);
  }
}

// Runs one command line; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integrability and foliation checks for submanifolds of Euclidean space", "foliakit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.set_version_flag("--version", std::string(kVersion));

  auto* link = app.add_subcommand("link", "Invariants and SI verdict for a link diagram");
  std::vector<std::string> link_inputs;
  int jobs = 1;
  link->add_option("inputs", link_inputs, "Gauss code or file containing one")->required();
  link->add_option("--jobs", jobs, "Process inputs in parallel")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Classify an embedding L^k in E^n");
  std::string expr;
  int n = 0;
  bool open = false;
  std::string nb = "unknown";
  std::string diagram_file;
  bool semichar = false;
  classify_cmd->add_option("manifold", expr, "Manifold expression")->required();
  classify_cmd->add_option("-n,--dim-ambient", n, "Ambient dimension")->required();
  classify_cmd->add_flag("--open", open, "No component of L is compact");
  classify_cmd->add_option("--nb-trivial", nb, "Normal bundle triviality")
      ->check(CLI::IsMember({"yes", "no", "unknown"}));
  classify_cmd->add_option("--diagram", diagram_file, "Gauss code file for links in E^3");
  classify_cmd->add_flag("--semichar", semichar, "Require the semicharacteristic to be defined");

  auto* table = app.add_subcommand("table", "Homotopy group tables");
  table->require_subcommand(1);
  auto* stiefel = table->add_subcommand("stiefel", "pi_k of the Stiefel manifold V_{n,n-k}");
  int sk = 0, sn = 0;
  stiefel->add_option("-k", sk, "k")->required();
  stiefel->add_option("-n", sn, "n")->required();
  auto* homotopy = table->add_subcommand("homotopy", "Homotopy classes of framings");
  int hk = 0, hn = 0, hr = 1;
  std::string frame = "normal";
  homotopy->add_option("-k", hk, "k")->required();
  homotopy->add_option("-n", hn, "n")->required();
  homotopy->add_option("-r", hr, "rank of H^k")->check(CLI::NonNegativeNumber);
  homotopy->add_option("--frame", frame, "tangent or normal")
      ->check(CLI::IsMember({"tangent", "normal"}));

  auto* orient = app.add_subcommand("orient", "Alternating orientation of a tile graph");
  std::string graph_input;
  orient->add_option("graph", graph_input, "Edge-list file or text")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (*link) {
      std::vector<std::future<Report>> pending;
      std::vector<Report> reports(link_inputs.size());
      auto work = [](std::string arg) {
        std::string text = file_or_inline(arg);
        return link_report(parse_gauss(text), arg);
      };
      std::size_t next = 0;
      while (next < link_inputs.size()) {
        std::size_t batch_end = std::min(link_inputs.size(), next + static_cast<std::size_t>(jobs));
        for (std::size_t i = next; i < batch_end; ++i) {
          pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       work, link_inputs[i]));
        }
        for (std::size_t i = next; i < batch_end; ++i) reports[i] = pending[i].get();
        next = batch_end;
      }
      if (json && reports.size() > 1) {
        out << nlohmann::json(reports).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (i && !json) out << "\n";
          emit(out, reports[i], json);
        }
      }
      return Ok;
    }
    if (*classify_cmd) {
      EmbeddingContext ctx;
      ctx.manifold = parse_manifold(expr);
      ctx.n = n;
      ctx.open_flag = open;
      ctx.normal_bundle_override = tristate_from_string(nb);
      if (!diagram_file.empty()) ctx.diagram = parse_gauss(file_or_inline(diagram_file));
      emit(out, classify_report(ctx, expr, semichar), json);
      return Ok;
    }
    if (*stiefel) {
      emit(out, stiefel_report(sk, sn), json);
      return Ok;
    }
    if (*homotopy) {
      emit(out, homotopy_report(hr, hk, hn, frame == "tangent" ? Frame::Tangent : Frame::Normal),
           json);
      return Ok;
    }
    if (*orient) {
      emit(out, orient_report(parse_edge_list(file_or_inline(graph_input)), graph_input), json);
      return Ok;
    }
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return Internal;
  } catch (const ContextInvalid& e) {
    err << "invalid context: " << e.what() << "\n";
    return ContextError;
  } catch (const OutOfTableRange& e) {
    err << "invalid context: " << e.what() << "\n";
    return ContextError;
  } catch (const GaussSyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return InputError;
  } catch (const ConsistencyError& e) {
    err << "inconsistent diagram: " << e.what() << "\n";
    return InputError;
  } catch (const ManifoldError& e) {
    err << "invalid manifold: " << e.what() << "\n";
    return InputError;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << "\n";
    return InputError;
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return Internal;
  }
  return Internal;
}

}  // namespace foliakit::cli
