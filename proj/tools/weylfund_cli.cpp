// weylfund: command-line front end for the weylfund library.
//
// Simple roots use the Bourbaki numbering (E_n: alpha_2 attached to
// alpha_4; G_2: alpha_1 long). Output goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 a verification failed, 2 input error, 3 a size
// guard refused the computation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weylfund/serialize.hpp"

using namespace weylfund;

namespace {

std::string root_str(const RootSystem& rs, int r) {
  std::ostringstream os;
  const auto& c = rs.coords(r);
  bool first = true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    int v = c[j];
    if (v < 0) {
      os << "-";
      v = -v;
    } else if (!first) {
      os << "+";
    }
    if (v != 1) os << v;
    os << "a" << j + 1;
    first = false;
  }
  return os.str();
}

std::string roots_str(const RootSystem& rs, const std::vector<int>& roots) {
  std::string s = "(";
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + root_str(rs, roots[i]);
  return s + ")";
}

std::string read_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InputError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite crystallographic root systems and their Weyl groups"};
  app.require_subcommand(1);
  std::uint64_t limit = default_group_limit();
  app.add_option("--limit", limit, "Largest Weyl group order that may be enumerated (default 200000 or WEYLFUND_GROUP_LIMIT)");

  std::string type, sub, tuple_text, genus_text, format = "json";
  int n = 1;
  bool oracle = false, gram = false, props = false;
  std::uint64_t seed = 1;

  auto* info = app.add_subcommand("info", "Rank, roots, group order, dominant roots, Cartan and Gram matrices");
  info->add_option("type", type, "Cartan type, e.g. A2, B3, A1xA1")->required();

  auto* canon = app.add_subcommand("canon", "Canonical representative of a tuple in the fundamental domain");
  canon->add_option("type", type)->required();
  canon->add_option("tuple", tuple_text, "JSON array of vectors in simple-root coordinates, or @file")->required();

  auto* strata = app.add_subcommand("strata", "Strata of V^n and their face poset");
  strata->add_option("type", type)->required();
  strata->add_option("n", n)->required()->check(CLI::Range(1, 16));
  auto* fmt_group = strata->add_option_group("format");
  bool dot = false, json = false, euler = false;
  fmt_group->add_flag("--dot", dot, "Hasse diagram in DOT");
  fmt_group->add_flag("--json", json, "Labels, dimensions and covers as JSON (default)");
  fmt_group->add_flag("--euler", euler, "Alternating sum of the strata against the sphere");
  fmt_group->require_option(0, 1);

  auto* chr = app.add_subcommand("char", "Verify the Solomon identities for W and for V^n");
  chr->add_option("type", type)->required();
  chr->add_option("n", n)->required()->check(CLI::Range(1, 16));

  auto* cls = app.add_subcommand("classify", "Conjugacy classes of simple subsystems of a given type");
  cls->add_option("ambient", type)->required();
  cls->add_option("sub", sub, "Subsystem type")->required();
  cls->add_flag("--oracle", oracle, "Cross-check against brute-force orbit enumeration");
  cls->add_flag("--gram", gram, "Use Gram genera instead of the Cartan genus");
  cls->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* fib = app.add_subcommand("fiber", "Tuples in the fundamental domain with a given genus");
  fib->add_option("type", type)->required();
  auto* fib_std = fib->add_option("--standard", sub, "Use the standard genus of this type");
  auto* fib_gen = fib->add_option("--genus", genus_text, "Genus as a JSON matrix, or @file");
  fib_std->excludes(fib_gen);
  fib->add_flag("--gram", gram, "Interpret the genus as a Gram matrix");

  auto* osh = app.add_subcommand("oshima", "Check the Oshima property for an irreducible root system");
  osh->add_option("type", type)->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force checks");
  orc->add_option("type", type)->required();
  orc->add_option("sub", sub, "Count W-orbits of simple subsystems of this type");
  orc->add_flag("--props", props, "Run randomized dot-action, diagram and splitting checks");
  orc->add_option("--seed", seed, "Seed for --props");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RootSystem rs = RootSystem::build(type);
    if (info->parsed()) {
      print(info_json(rs, limit));
    } else if (canon->parsed()) {
      TupleV t = parse_tuple(read_text(tuple_text), rs.rank());
      print(canonical_json(rs, canonicalize(rs, t)));
    } else if (strata->parsed()) {
      if (euler) {
        long long chi = euler_characteristic(rs, n, limit);
        long long expect = sphere_euler(n * rs.rank() - 1);
        std::cout << chi << " = " << expect << "\n";
        return chi == expect ? 0 : 1;
      }
      FacePoset p = face_poset(rs, n, limit);
      if (dot)
        std::cout << poset_dot(rs, p);
      else
        print(poset_json(rs, p));
    } else if (chr->parsed()) {
      Json j;
      j["solomon"] = check_json(verify_solomon(rs, limit));
      j["solomon_power"] = check_json(verify_solomon_power(rs, n, limit));
      print(j);
      return j["solomon"]["ok"].get<bool>() && j["solomon_power"]["ok"].get<bool>() ? 0 : 1;
    } else if (cls->parsed()) {
      auto report = classify_subsystems(rs, CartanType::parse(sub), gram ? GenusKind::Gram : GenusKind::Cartan);
      if (oracle) certify(rs, report, limit);
      if (format == "table") {
        std::cout << "ambient " << report.ambient.str() << ", subsystem " << report.subsystem_type.str() << ": "
                  << report.class_count << " class(es), fiber size " << report.fiber.size() << "\n";
        for (std::size_t o = 0; o < report.orbits.size(); ++o)
          std::cout << o + 1 << "  " << roots_str(rs, report.representative_tuple(o)) << "  orbit size "
                    << report.orbits[o].size() << "\n";
        if (report.certified)
          std::cout << "oracle: " << *report.oracle_count << " class(es), "
                    << (*report.certified ? "certified" : "NOT certified") << "\n";
      } else {
        print(report_json(rs, report));
      }
      if (report.certified && !*report.certified) return 1;
    } else if (fib->parsed()) {
      Genus g;
      if (!sub.empty()) {
        g = standard_genus(CartanType::parse(sub));
      } else if (!genus_text.empty()) {
        Json j = Json::parse(read_text(genus_text), nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw InputError("malformed JSON genus");
        std::vector<std::vector<Rat>> rows;
        for (const auto& row : j) {
          if (!row.is_array() || row.size() != j.size()) throw InputError("genus must be a square matrix");
          std::vector<Rat> r;
          for (const auto& x : row) r.push_back(rat_from_json(x));
          rows.push_back(std::move(r));
        }
        g = MatRat::from_rows(rows);
      } else {
        throw InputError("fiber needs --standard or --genus");
      }
      Json out;
      out["genus"] = to_json(g);
      Json fiber = Json::array();
      for (const auto& b : enumerate_fiber(rs, g, gram ? GenusKind::Gram : GenusKind::Cartan))
        fiber.push_back(roots_json(rs, b));
      out["fiber"] = fiber;
      print(out);
    } else if (osh->parsed()) {
      CheckReport c = check_oshima(rs);
      print(check_json(c));
      return c.ok ? 0 : 1;
    } else if (orc->parsed()) {
      Json out;
      bool ok = true;
      if (!sub.empty()) {
        auto sets = oracle_simple_subsystems(rs, CartanType::parse(sub));
        auto orbits = oracle_orbits_of_sets(rs, sets, limit);
        out["subsystem"] = normalize_type(CartanType::parse(sub)).str();
        out["simple_subsystems"] = sets.size();
        out["class_count"] = orbits.size();
        Json reps = Json::array();
        for (const auto& o : orbits) reps.push_back(roots_json(rs, sets[o.front()]));
        out["representatives"] = reps;
      }
      if (props) {
        CheckReport a = verify_dots(rs, seed), b = verify_diagaut(rs, seed), c = verify_simpcon(rs, seed);
        out["dots"] = check_json(a);
        out["diagaut"] = check_json(b);
        out["simpcon"] = check_json(c);
        ok = a.ok && b.ok && c.ok;
      }
      if (sub.empty() && !props) throw InputError("oracle needs a subsystem type or --props");
      print(out);
      return ok ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
