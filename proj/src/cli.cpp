#include "quandle/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "quandle/constructions.hpp"
#include "quandle/enumeration.hpp"
#include "quandle/guard.hpp"
#include "quandle/io.hpp"
#include "quandle/isomorphism.hpp"
#include "quandle/recognition.hpp"

namespace quandle {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

long long parse_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (tok.empty() || used != tok.size())
    throw std::invalid_argument(what + ": not an integer: '" + tok + "'");
  return v;
}

}  // namespace

FiniteAbelianGroup parse_group(const std::string& spec) {
  std::vector<std::uint32_t> moduli;
  for (const auto& tok : split(spec, ',')) {
    long long m = parse_int(tok, "--group");
    if (m < 1 || m > 1'000'000)
      throw std::invalid_argument("--group: moduli must be positive");
    if (m > 1)
      moduli.push_back(static_cast<std::uint32_t>(m));
  }
  return FiniteAbelianGroup(std::move(moduli));
}

GroupMap parse_map(const FiniteAbelianGroup& a, const std::string& spec) {
  if (spec == "id")
    return GroupMap::identity(a);
  if (spec.find(';') == std::string::npos && spec.find(',') == std::string::npos)
    return GroupMap::scalar(a, parse_int(spec, "--f"));
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& row : split(spec, ';')) {
    std::vector<std::int64_t> r;
    for (const auto& tok : split(row, ','))
      r.push_back(parse_int(tok, "--f"));
    m.push_back(std::move(r));
  }
  return GroupMap(a, a, std::move(m));
}

std::vector<Element> parse_elements(const FiniteAbelianGroup& a, const std::string& spec) {
  std::vector<Element> out;
  for (const auto& el : split(spec, ',')) {
    std::vector<std::int64_t> coords;
    for (const auto& tok : split(el, ':'))
      coords.push_back(parse_int(tok, "--d"));
    if (a.rank() == 0 && coords.size() == 1 && coords[0] == 0)
      coords.clear();
    if (coords.size() != a.rank())
      throw std::invalid_argument("--d: element '" + el + "' needs " + std::to_string(a.rank()) +
                                  " coordinates");
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] < 0 || coords[i] >= a.moduli()[i])
        throw std::invalid_argument("--d: coordinate " + std::to_string(coords[i]) +
                                    " of '" + el + "' is not a residue mod " +
                                    std::to_string(a.moduli()[i]));
    out.push_back(a.index(coords));
  }
  return out;
}

namespace {

json group_json(const FiniteAbelianGroup& a) {
  return {{"moduli", a.moduli()}, {"name", a.to_string()}};
}

json element_json(const FiniteAbelianGroup& a, Element x) { return a.coords(x); }

json elements_json(const FiniteAbelianGroup& a, const std::vector<Element>& xs) {
  json j = json::array();
  for (Element x : xs)
    j.push_back(element_json(a, x));
  return j;
}

json report_json(const std::string& property, const RecognitionReport& r) {
  json perms = json::array();
  for (const auto& p : r.permutations)
    perms.push_back(p.images());
  return {{"property", property},
          {"verdict", r.verdict},
          {"reason", to_string(r.reason)},
          {"permutations", perms},
          {"elements", r.elements},
          {"counts", r.counts}};
}

json descriptor_json(const ExtensionDescriptor& d) {
  return {{"group", group_json(d.group)},
          {"f", d.f.matrix()},
          {"d", elements_json(d.group, d.d)},
          {"k", d.k()}};
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

// --- check -----------------------------------------------------------------

int cmd_check(Context& c, const std::string& file, const std::string& property) {
  std::string text = read_input(file, c.in);
  if (property == "valid") {
    ParsedTable t = parse_table(text);
    auto res = validate(t.rows);
    json v = json::array();
    for (const auto& a : res.violations)
      v.push_back({{"axiom", to_string(a.axiom)},
                   {"x", a.x},
                   {"y", a.y},
                   {"z", a.z},
                   {"line", t.row_lines[a.x]}});
    emit(c.out, {{"property", property}, {"verdict", res.quandle.has_value()}, {"violations", v}});
    return res.quandle ? kHolds : kFails;
  }
  Quandle q = parse_quandle(text);
  if (property == "affine" || property == "quasi-affine") {
    auto r = property == "affine" ? is_affine(q) : is_quasi_affine(q);
    emit(c.out, report_json(property, r));
    return r.verdict ? kHolds : kFails;
  }
  bool verdict = property == "medial" ? is_medial(q)
                 : property == "latin" ? is_latin(q)
                                       : is_tiny_dis(q);
  emit(c.out, {{"property", property}, {"verdict", verdict}});
  return verdict ? kHolds : kFails;
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string kind, group, f = "id", d, left, right, out;
  std::size_t k = 0;
};

int cmd_construct(Context& c, const ConstructArgs& a) {
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty())
      throw std::invalid_argument(std::string("construct ") + a.kind + ": " + flag +
                                  " is required");
  };
  std::optional<Quandle> q;
  if (a.kind == "aff") {
    need(a.group, "--group");
    auto g = parse_group(a.group);
    q = affine_quandle(g, parse_map(g, a.f));
  } else if (a.kind == "ext") {
    need(a.group, "--group");
    need(a.d, "--d");
    auto g = parse_group(a.group);
    q = semiregular_extension({g, parse_map(g, a.f), parse_elements(g, a.d)});
  } else if (a.kind == "proj") {
    if (a.k == 0)
      throw std::invalid_argument("construct proj: --k >= 1 is required");
    q = projection_quandle(a.k);
  } else {
    need(a.left, "--left");
    need(a.right, "--right");
    q = direct_product(parse_quandle(read_input(a.left, c.in)),
                       parse_quandle(read_input(a.right, c.in)));
  }
  std::string text = serialize(*q);
  if (a.out.empty())
    c.out << text;
  else
    write_file(a.out, text);
  return kHolds;
}

// --- iso -------------------------------------------------------------------

struct ExtensionIso {
  std::vector<Point> bijection;
  json witness;
};

std::optional<ExtensionIso> iso_by_extension(const Quandle& q1, const Quandle& q2) {
  auto r1 = extension_representation(q1), r2 = extension_representation(q2);
  if (!r1.representation || !r2.representation)
    throw std::invalid_argument("iso --method extension: both quandles must be quasi-affine");
  const auto& e1 = *r1.representation;
  const auto& e2 = *r2.representation;
  auto w = ext_isomorphic(e1.descriptor, e2.descriptor);
  if (!w)
    return std::nullopt;
  auto phi = witness_to_bijection(e1.descriptor, e2.descriptor, *w);
  std::vector<Point> inv1(q1.size());
  for (std::size_t x = 0; x < e1.iso.size(); ++x)
    inv1[e1.iso[x]] = static_cast<Point>(x);
  std::vector<Point> map(q1.size());
  for (Point x = 0; x < q1.size(); ++x)
    map[x] = e2.iso[phi[inv1[x]]];
  if (!is_isomorphism(q1, q2, map))
    throw std::logic_error("iso: extension witness does not give an isomorphism");
  const auto& a2 = e2.descriptor.group;
  json wj = {{"descriptor1", descriptor_json(e1.descriptor)},
             {"descriptor2", descriptor_json(e2.descriptor)},
             {"pi", w->pi},
             {"psi", w->psi.matrix()},
             {"a", element_json(a2, w->a)},
             {"shift", elements_json(a2, w->shift)}};
  return ExtensionIso{std::move(map), std::move(wj)};
}

int cmd_iso(Context& c, const std::string& f1, const std::string& f2, const std::string& method) {
  Quandle q1 = parse_quandle(read_input(f1, c.in));
  Quandle q2 = parse_quandle(read_input(f2, c.in));
  std::string used = method;
  if (method == "auto")
    used = is_quasi_affine(q1) && is_quasi_affine(q2) ? "extension" : "brute";
  json j = {{"method", used}};
  bool iso = false;
  if (q1.size() != q2.size()) {
    iso = false;
  } else if (used == "brute") {
    if (auto m = brute_force_isomorphism(q1, q2)) {
      iso = true;
      j["bijection"] = *m;
    }
  } else if (auto e = iso_by_extension(q1, q2)) {
    iso = true;
    j["bijection"] = e->bijection;
    j["witness"] = e->witness;
  }
  j["isomorphic"] = iso;
  emit(c.out, j);
  return iso ? kHolds : kFails;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::size_t n = 0;
  std::string filter = "quasi-affine", emit_dir, format = "json";
  int jobs = 0;
};

bool passes(const EpsilonClass& c, const std::string& filter) {
  if (filter == "affine")
    return c.affine;
  if (filter == "latin")
    return c.latin;
  return true;
}

int cmd_enumerate(Context& c, const EnumerateArgs& a) {
  Enumeration e = enumerate_quasi_affine(a.n, a.jobs);
  std::map<std::size_t, std::size_t> by_k;
  for (auto [k, count] : e.by_k())
    by_k[k] = 0;
  json classes = json::array();
  std::size_t total = 0;
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& cell : e.cells)
    for (const auto& cls : cell.result.classes) {
      if (!passes(cls, a.filter))
        continue;
      ++total;
      ++by_k[cell.k];
      json cj = descriptor_json(cls.descriptor);
      cj["counts"] = cls.counts;
      cj["affine"] = cls.affine;
      cj["latin"] = cls.latin;
      classes.push_back(cj);
      if (!a.emit_dir.empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "order%zu_%03zu.txt", a.n, total);
        std::string comment = "k=" + std::to_string(cell.k) + " group=" +
                              cell.group.to_string() + " f=" + json(cell.f.matrix()).dump() +
                              " d=" + elements_json(cell.group, cls.descriptor.d).dump();
        files.emplace_back(name, serialize(semiregular_extension(cls.descriptor), {comment}));
      }
    }
  if (!a.emit_dir.empty()) {
    std::filesystem::create_directories(a.emit_dir);
    for (const auto& [name, text] : files)
      write_file((std::filesystem::path(a.emit_dir) / name).string(), text);
  }
  if (a.format == "csv") {
    c.out << "n,k,count\n";
    for (auto [k, count] : by_k)
      c.out << a.n << ',' << k << ',' << count << '\n';
    c.out << a.n << ",all," << total << '\n';
    return kHolds;
  }
  json bk = json::array();
  for (auto [k, count] : by_k)
    bk.push_back({{"k", k}, {"count", count}});
  emit(c.out, {{"n", a.n},
               {"filter", a.filter},
               {"total", total},
               {"by_k", bk},
               {"classes", classes}});
  return kHolds;
}

// --- epsilon ---------------------------------------------------------------

int cmd_epsilon(Context& c, const std::string& group, const std::string& f, std::size_t k) {
  auto g = parse_group(group);
  auto map = parse_map(g, f);
  auto r = epsilon(g, map, k);
  json classes = json::array();
  for (const auto& cls : r.classes)
    classes.push_back({{"counts", cls.counts}, {"d", elements_json(g, cls.descriptor.d)}});
  json j = {{"group", group_json(g)},
            {"f", map.matrix()},
            {"k", k},
            {"quotient", group_json(r.quotient)},
            {"epsilon", r.count()},
            {"classes", classes}};
  if (auto cf = epsilon_closed_form(g, map, k))
    j["closed_form"] = *cf;
  emit(c.out, j);
  return kHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Finite quandles: recognition, construction, isomorphism, enumeration", "quandle"};
  app.require_subcommand(1);
  Context ctx{out, err, in};
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Test a property of a quandle file");
  std::string check_file, property;
  check->add_option("file", check_file, "Quandle file, or - for stdin")->required();
  check->add_option("property", property, "Property to test")
      ->required()
      ->check(CLI::IsMember({"affine", "quasi-affine", "medial", "latin", "tiny", "valid"}));
  check->callback([&] { action = [&] { return cmd_check(ctx, check_file, property); }; });

  auto* construct = app.add_subcommand("construct", "Build a quandle table");
  ConstructArgs cargs;
  construct->add_option("kind", cargs.kind, "aff, ext, proj or product")
      ->required()
      ->check(CLI::IsMember({"aff", "ext", "proj", "product"}));
  construct->add_option("--group", cargs.group, "Moduli, e.g. 2,2");
  construct->add_option("--f", cargs.f, "id, an integer, or matrix rows 'a,b;c,d'");
  construct->add_option("--d", cargs.d, "Elements, e.g. 0,1 or 0:0,1:1");
  construct->add_option("--k", cargs.k, "Order of the projection quandle");
  construct->add_option("--left", cargs.left, "First factor of a product");
  construct->add_option("--right", cargs.right, "Second factor of a product");
  construct->add_option("--out", cargs.out, "Output file (default: stdout)");
  construct->callback([&] { action = [&] { return cmd_construct(ctx, cargs); }; });

  auto* iso = app.add_subcommand("iso", "Test two quandle files for isomorphism");
  std::string iso1, iso2, method = "auto";
  iso->add_option("file1", iso1)->required();
  iso->add_option("file2", iso2)->required();
  iso->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "extension"}));
  iso->callback([&] { action = [&] { return cmd_iso(ctx, iso1, iso2, method); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Quasi-affine quandles of order n");
  EnumerateArgs eargs;
  enumerate->add_option("n", eargs.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--filter", eargs.filter)
      ->check(CLI::IsMember({"quasi-affine", "affine", "latin"}));
  enumerate->add_option("--emit-tables", eargs.emit_dir, "Directory for class tables");
  enumerate->add_option("--format", eargs.format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--jobs", eargs.jobs, "Worker threads (0: default)")
      ->check(CLI::NonNegativeNumber);
  enumerate->callback([&] { action = [&] { return cmd_enumerate(ctx, eargs); }; });

  auto* eps = app.add_subcommand("epsilon", "Count indecomposable extensions over (A, f)");
  std::string eg, ef = "id";
  std::size_t ek = 0;
  eps->add_option("--group", eg)->required();
  eps->add_option("--f", ef);
  eps->add_option("--k", ek)->required()->check(CLI::PositiveNumber);
  eps->callback([&] { action = [&] { return cmd_epsilon(ctx, eg, ef, ek); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kHolds;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    return action();
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace quandle
