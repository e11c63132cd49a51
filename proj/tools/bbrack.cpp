// bbrack: biquandle bracket invariants of oriented links from the command
// line.  Subcommands: verify-biquandle, verify-bracket, colorings,
// invariant, search, tables, rmatrix.
//
// Exit codes: 0 success, 1 validation failure (bad input data or a
// structure failing verification), 2 usage error (bad flags or names).
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bbrack/bracket.hpp"
#include "bbrack/coloring.hpp"
#include "bbrack/diagram.hpp"
#include "bbrack/search.hpp"
#include "bbrack/statesum.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace bbrack;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileError", "FileError: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Existing file path wins; otherwise a built-in name.
Biquandle load_biquandle(const std::string& arg) {
  if (fs::exists(arg)) {
    Biquandle b = Biquandle::parse_text(read_file(arg));
    b.set_name(fs::path(arg).stem().string());
    return b;
  }
  try {
    return builtin_biquandle(arg);
  } catch (const Error&) {
    throw UsageError("unknown biquandle '" + arg +
                     "' (not a file, not a built-in name)");
  }
}

// Bracket-file `biquandle:` header: built-in name, else a path relative
// to the bracket file's directory, else relative to the working directory.
Biquandle resolve_header_biquandle(const std::string& name,
                                   const std::string& bracket_path) {
  for (const auto& bn : builtin_biquandle_names())
    if (name == bn) return builtin_biquandle(name);
  fs::path rel = fs::path(bracket_path).parent_path() / name;
  if (fs::exists(rel)) {
    Biquandle b = Biquandle::parse_text(read_file(rel.string()));
    b.set_name(rel.stem().string());
    return b;
  }
  if (fs::exists(name)) {
    Biquandle b = Biquandle::parse_text(read_file(name));
    b.set_name(fs::path(name).stem().string());
    return b;
  }
  throw UsageError("bracket file references unknown biquandle '" + name + "'");
}

struct LoadedBracket {
  Ring ring;
  Biquandle bq;
  Matrix A, B;
  std::string name;
};

// Existing file path wins; otherwise the basename (minus ".br") must be a
// built-in bracket name.  --biquandle overrides the file header.
LoadedBracket load_bracket(const std::string& arg,
                           const std::string& biquandle_arg) {
  if (fs::exists(arg)) {
    BracketFile bf = parse_bracket_text(read_file(arg));
    Biquandle bq = !biquandle_arg.empty()
                       ? load_biquandle(biquandle_arg)
                   : !bf.biquandle_name.empty()
                       ? resolve_header_biquandle(bf.biquandle_name, arg)
                       : throw UsageError(
                             "bracket file '" + arg +
                             "' has no biquandle header; pass --biquandle");
    return {bf.ring, bq, bf.A, bf.B, fs::path(arg).stem().string()};
  }
  std::string name = fs::path(arg).filename().string();
  if (name.size() > 3 && name.substr(name.size() - 3) == ".br")
    name = name.substr(0, name.size() - 3);
  try {
    Bracket br = builtin_bracket(name);
    Biquandle bq =
        biquandle_arg.empty() ? br.bq() : load_biquandle(biquandle_arg);
    return {br.ring(), bq, br.A(), br.B(), br.name()};
  } catch (const Error&) {
    throw UsageError("unknown bracket '" + arg +
                     "' (not a file, not a built-in name)");
  }
}

Diagram load_diagram(const std::string& knot, const std::string& pd,
                     bool mirror) {
  if (knot.empty() == pd.empty())
    throw UsageError("pass exactly one of --knot or --pd");
  Diagram dia = [&] {
    if (!knot.empty()) {
      try {
        return Diagram::catalog_lookup(knot);
      } catch (const Error&) {
        throw UsageError("unknown catalog name '" + knot + "'");
      }
    }
    return Diagram::parse(pd);
  }();
  return mirror ? dia.mirror() : dia;
}

std::string bracket_row_text(const Ring& R, const Matrix& A, const Matrix& B,
                             int x) {
  std::string s;
  for (size_t y = 0; y < A[x].size(); ++y)
    s += (y ? " " : "") + R.format(A[x][y]);
  s += " |";
  for (size_t y = 0; y < B[x].size(); ++y) s += " " + R.format(B[x][y]);
  return s;
}

json bracket_json(const Bracket& br) {
  json jA = json::array(), jB = json::array();
  for (int x = 0; x < br.n(); ++x) {
    json ra = json::array(), rb = json::array();
    for (int y = 0; y < br.n(); ++y) {
      ra.push_back(br.ring().format(br.a(x, y)));
      rb.push_back(br.ring().format(br.b(x, y)));
    }
    jA.push_back(ra);
    jB.push_back(rb);
  }
  return {{"A", jA},
          {"B", jB},
          {"delta", br.ring().format(br.delta())},
          {"w", br.ring().format(br.w())}};
}

int cmd_verify_biquandle(const std::string& bq_arg, const std::string& format) {
  Biquandle bq = load_biquandle(bq_arg);
  auto fail = bq.verify();
  if (format == "json") {
    json j{{"valid", !fail.has_value()}, {"n", bq.n()}};
    if (fail) j["error"] = *fail;
    std::cout << j.dump() << "\n";
  } else if (fail) {
    std::cout << *fail << "\n";
  } else {
    std::cout << "ok (n=" << bq.n() << ")\n";
  }
  return fail ? 1 : 0;
}

int cmd_verify_bracket(const std::string& br_arg, const std::string& bq_arg,
                       const std::string& format) {
  LoadedBracket lb = load_bracket(br_arg, bq_arg);
  auto fail = verify_bracket(lb.ring, lb.bq, lb.A, lb.B);
  if (format == "json") {
    json j{{"valid", !fail.has_value()}};
    if (fail) {
      j["error"] = *fail;
    } else {
      Bracket br(lb.ring, lb.bq, lb.A, lb.B, lb.name);
      j["delta"] = lb.ring.format(br.delta());
      j["w"] = lb.ring.format(br.w());
    }
    std::cout << j.dump() << "\n";
  } else if (fail) {
    std::cout << *fail << "\n";
  } else {
    Bracket br(lb.ring, lb.bq, lb.A, lb.B, lb.name);
    std::cout << "ok (delta=" << lb.ring.format(br.delta())
              << ", w=" << lb.ring.format(br.w()) << ")\n";
  }
  return fail ? 1 : 0;
}

int cmd_colorings(const std::string& knot, const std::string& pd, bool mirror,
                  const std::string& bq_arg, bool list,
                  const std::string& format) {
  Biquandle bq = load_biquandle(bq_arg);
  if (auto fail = bq.verify())
    throw Error("AxiomViolation", "AxiomViolation: " + *fail);
  Diagram dia = load_diagram(knot, pd, mirror);
  auto cols = colorings(bq, dia);
  if (format == "json") {
    json j{{"count", cols.size()}};
    if (list) {
      json arr = json::array();
      for (const auto& c : cols) {
        json jc{{"colors", json::object()}, {"free", json::array()}};
        for (auto& [e, v] : c.edge_color)
          jc["colors"][std::to_string(e)] = v + 1;
        for (int v : c.ucolors) jc["free"].push_back(v + 1);
        arr.push_back(jc);
      }
      j["colorings"] = arr;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (list) {
    for (const auto& c : cols) {
      std::string line;
      for (auto& [e, v] : c.edge_color)
        line += (line.empty() ? "" : " ") + std::to_string(e) + "=" +
                std::to_string(v + 1);
      if (!c.ucolors.empty()) {
        line += line.empty() ? "u:" : " u:";
        for (int v : c.ucolors) line += " " + std::to_string(v + 1);
      }
      std::cout << line << "\n";
    }
  }
  std::cout << cols.size() << "\n";
  return 0;
}

int cmd_invariant(const std::string& knot, const std::string& pd, bool mirror,
                  const std::string& br_arg, const std::string& bq_arg,
                  const std::string& format) {
  LoadedBracket lb = load_bracket(br_arg, bq_arg);
  Bracket br = make_bracket(lb.ring, lb.bq, lb.A, lb.B, lb.name);
  Diagram dia = load_diagram(knot, pd, mirror);
  InvariantValue v = invariant(dia, br);
  if (format == "json") {
    json vals = json::array();
    for (const auto& [e, m] : v.values)
      vals.push_back({{"exponent", v.ring.format(e)}, {"multiplicity", m}});
    std::cout << json{{"values", vals}, {"count", v.count}}.dump() << "\n";
  } else if (format == "multiset") {
    std::cout << multiset_string(v) << "\n";
  } else {
    std::cout << polynomial_string(v) << "\n";
  }
  return 0;
}

int cmd_search(const std::string& bq_arg, const std::string& ring_spec,
               bool dedup, long long limit, const std::string& out_path,
               const std::string& format) {
  Biquandle bq = load_biquandle(bq_arg);
  if (auto fail = bq.verify())
    throw Error("AxiomViolation", "AxiomViolation: " + *fail);
  Ring R = [&] {
    try {
      return Ring::parse_spec(ring_spec);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  SearchOptions opts;
  opts.dedup = dedup;
  opts.limit = limit;
  SearchReport rep = search_brackets(bq, R, opts);

  json jrep{{"biquandle", rep.biquandle_name},
            {"ring", rep.ring_spec},
            {"count", rep.found.size()},
            {"candidates", rep.candidates},
            {"elapsed_seconds", rep.elapsed_seconds}};
  json jbrs = json::array();
  for (const auto& br : rep.found) jbrs.push_back(bracket_json(br));
  jrep["brackets"] = jbrs;
  if (dedup) {
    json jcl = json::array();
    for (const auto& cls : rep.classes) jcl.push_back(cls);
    jrep["classes"] = jcl;
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      throw Error("FileError", "FileError: cannot write '" + out_path + "'");
    out << jrep.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << jrep.dump() << "\n";
    return 0;
  }
  std::cout << "found " << rep.found.size() << " brackets (candidates: "
            << rep.candidates << ")\n";
  for (const auto& br : rep.found) {
    std::string rows;
    for (int x = 0; x < br.n(); ++x)
      rows += (x ? " ; " : "") + bracket_row_text(br.ring(), br.A(), br.B(), x);
    std::cout << "delta=" << br.ring().format(br.delta())
              << " w=" << br.ring().format(br.w()) << " : " << rows << "\n";
  }
  if (dedup) {
    std::cout << "classes: " << rep.classes.size() << "\n";
    for (size_t i = 0; i < rep.classes.size(); ++i) {
      std::cout << "class " << i << ":";
      for (size_t m : rep.classes[i]) std::cout << " " << m;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_tables(const std::string& which, const std::string& format) {
  Bracket br = builtin_bracket(which == "z11-knots" ? "z11-dihedral" : "f8");
  auto include = [&](const std::string& name) {
    if (which == "f8-links") return !name.empty() && name[0] == 'L';
    return name == "Unknot" ||
           (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0])));
  };
  // canonical multiset key -> names in catalog order
  std::map<std::vector<std::pair<long long, long long>>,
           std::pair<InvariantValue, std::vector<std::string>>>
      rows;
  for (const auto& entry : Diagram::catalog_names()) {
    if (!include(entry)) continue;
    InvariantValue v = invariant(Diagram::catalog_lookup(entry), br);
    std::vector<std::pair<long long, long long>> key;
    for (const auto& [e, m] : v.values) key.push_back({e.code, m});
    auto& slot = rows[key];
    if (slot.second.empty()) slot.first = v;
    slot.second.push_back(entry);
  }
  bool z11 = which == "z11-knots";
  if (format == "json") {
    json arr = json::array();
    for (const auto& [key, row] : rows) {
      json vals = json::array();
      for (const auto& [e, m] : row.first.values)
        vals.push_back(
            {{"exponent", row.first.ring.format(e)}, {"multiplicity", m}});
      arr.push_back({{"value", z11 ? polynomial_string(row.first)
                                   : compressed_multiset_string(row.first)},
                     {"values", vals},
                     {"names", row.second}});
    }
    std::cout << json{{"table", which}, {"rows", arr}}.dump() << "\n";
    return 0;
  }
  for (const auto& [key, row] : rows) {
    std::string value = z11 ? polynomial_string(row.first)
                            : compressed_multiset_string(row.first);
    std::string names;
    for (const auto& nm : row.second) names += (names.empty() ? "" : ", ") + nm;
    std::cout << value << " : " << names << "\n";
  }
  return 0;
}

int cmd_rmatrix(const std::string& br_arg, const std::string& bq_arg,
                const std::string& format) {
  LoadedBracket lb = load_bracket(br_arg, bq_arg);
  Bracket br = make_bracket(lb.ring, lb.bq, lb.A, lb.B, lb.name);
  RMatrices rm = to_rmatrices(br);
  const Ring& R = br.ring();
  auto vec_text = [&](const std::vector<Elem>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + R.format(e);
    return s;
  };
  if (format == "json") {
    auto mat_json = [&](const Matrix& M) {
      json rows = json::array();
      for (const auto& row : M) {
        json r = json::array();
        for (const auto& e : row) r.push_back(R.format(e));
        rows.push_back(r);
      }
      return rows;
    };
    json jx = json::array();
    for (int x = 0; x < br.n(); ++x)
      for (int y = 0; y < br.n(); ++y)
        jx.push_back({{"x", x + 1},
                      {"y", y + 1},
                      {"matrix", mat_json(rm.X[x][y])},
                      {"classical", is_classical_rmatrix(R, rm.X[x][y])}});
    json j{{"I", mat_json(rm.I)},
           {"N", json::array()},
           {"U", json::array()},
           {"X", jx}};
    for (const auto& e : rm.N) j["N"].push_back(R.format(e));
    for (const auto& e : rm.U) j["U"].push_back(R.format(e));
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "I:\n";
  for (const auto& row : rm.I) std::cout << vec_text(row) << "\n";
  std::cout << "N: " << vec_text(rm.N) << "\n";
  std::cout << "U: " << vec_text(rm.U) << "\n";
  for (int x = 0; x < br.n(); ++x)
    for (int y = 0; y < br.n(); ++y) {
      bool cl = is_classical_rmatrix(R, rm.X[x][y]);
      std::cout << "X[" << x + 1 << "," << y + 1
                << "] (classical R-matrix: " << (cl ? "yes" : "no") << "):\n";
      for (const auto& row : rm.X[x][y]) std::cout << vec_text(row) << "\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biquandle bracket invariants of oriented links"};
  app.require_subcommand(1);
  std::string format = "text";

  std::string vb_bq;
  auto* vb = app.add_subcommand("verify-biquandle",
                                "check the biquandle axioms for a table");
  vb->add_option("--biquandle", vb_bq, "biquandle file or built-in name")
      ->required();
  vb->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string vbr_br, vbr_bq;
  auto* vbr = app.add_subcommand("verify-bracket",
                                 "check the bracket axioms for an [A|B] file");
  vbr->add_option("--bracket", vbr_br, "bracket file or built-in name")
      ->required();
  vbr->add_option("--biquandle", vbr_bq, "override the file's biquandle");
  vbr->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string col_knot, col_pd, col_bq;
  bool col_mirror = false, col_list = false;
  auto* col = app.add_subcommand("colorings",
                                 "count (or list) biquandle colorings");
  col->add_option("--knot", col_knot, "catalog name");
  col->add_option("--pd", col_pd, "inline PD code");
  col->add_flag("--mirror", col_mirror, "mirror the diagram");
  col->add_option("--biquandle", col_bq)->required();
  col->add_flag("--list", col_list, "print each coloring");
  col->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string inv_knot, inv_pd, inv_br, inv_bq, inv_format = "poly";
  bool inv_mirror = false;
  auto* inv =
      app.add_subcommand("invariant", "bracket invariant of one diagram");
  inv->add_option("--knot", inv_knot, "catalog name");
  inv->add_option("--pd", inv_pd, "inline PD code");
  inv->add_flag("--mirror", inv_mirror, "mirror the diagram");
  inv->add_option("--bracket", inv_br)->required();
  inv->add_option("--biquandle", inv_bq, "override the bracket's biquandle");
  inv->add_option("--format", inv_format)
      ->check(CLI::IsMember({"poly", "multiset", "json"}));

  std::string se_bq, se_ring, se_out;
  bool se_dedup = false;
  long long se_limit = -1;
  auto* se = app.add_subcommand("search",
                                "enumerate all brackets on a biquandle");
  se->add_option("--biquandle", se_bq)->required();
  se->add_option("--ring", se_ring, "ring spec, e.g. Z11 or GF(2^3;1+t+t^3)")
      ->required();
  se->add_flag("--dedup", se_dedup, "group results by equivalence");
  se->add_option("--limit", se_limit, "stop after this many results");
  se->add_option("--out", se_out, "write a JSON report");
  se->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string tb_which;
  auto* tb = app.add_subcommand("tables", "reproduce the reference tables");
  tb->add_option("which", tb_which)
      ->required()
      ->check(CLI::IsMember({"f8-knots", "f8-links", "z11-knots"}));
  tb->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string rm_br, rm_bq;
  auto* rm = app.add_subcommand("rmatrix", "export the colored R-matrices");
  rm->add_option("--bracket", rm_br)->required();
  rm->add_option("--biquandle", rm_bq, "override the bracket's biquandle");
  rm->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (vb->parsed()) return cmd_verify_biquandle(vb_bq, format);
    if (vbr->parsed()) return cmd_verify_bracket(vbr_br, vbr_bq, format);
    if (col->parsed())
      return cmd_colorings(col_knot, col_pd, col_mirror, col_bq, col_list,
                           format);
    if (inv->parsed())
      return cmd_invariant(inv_knot, inv_pd, inv_mirror, inv_br, inv_bq,
                           inv_format);
    if (se->parsed())
      return cmd_search(se_bq, se_ring, se_dedup, se_limit, se_out, format);
    if (tb->parsed()) return cmd_tables(tb_which, format);
    if (rm->parsed()) return cmd_rmatrix(rm_br, rm_bq, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
