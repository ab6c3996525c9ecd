// hyperfan: classification, resolution and transition data of
// Z_n-hyperconifold singularities, with exact arithmetic throughout.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperfan/report.hpp"
#include "hyperfan/svg.hpp"

namespace hf = hyperfan;

namespace {

struct GlobalOptions {
  std::string format = "json";
  std::string out;
  std::string seed_order;
  std::int64_t enum_bound = hf::kDefaultEnumerationBound;
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw hf::InvalidInputError("cannot open output file: " + g.out);
  f << text;
}

std::optional<std::vector<int>> parse_seed_order(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<int> order;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) order.push_back(std::stoi(tok));
  return order;
}

hf::Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw hf::InvalidInputError("cannot open file: " + path);
  hf::Json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw hf::InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

hf::FiniteGroup load_group(const std::string& path) {
  hf::Json j = load_json_file(path);
  if (!j.contains("type")) throw hf::InvalidInputError("group file is missing \"type\"");
  std::string type = j["type"];
  if (type == "cayley") {
    std::vector<std::vector<int>> table = j.at("table");
    std::vector<std::string> names = j.value("generator_names", std::vector<std::string>{});
    std::vector<int> gens = j.value("generators", std::vector<int>{});
    return hf::group_from_cayley(table, names, gens);
  }
  if (type == "presentation") {
    std::vector<std::string> names = j.at("generators");
    std::vector<hf::Word> relators;
    for (const auto& r : j.at("relators"))
      relators.push_back(hf::parse_word(r.get<std::string>(), names));
    std::size_t ceiling = j.value("coset_ceiling", std::size_t{100000});
    return hf::group_from_presentation(names, relators, ceiling);
  }
  if (type == "permutations") {
    std::vector<std::vector<int>> images = j.at("images");
    std::vector<std::string> names = j.value("names", std::vector<std::string>{});
    if (names.empty())
      for (std::size_t i = 0; i < images.size(); ++i) names.push_back("g" + std::to_string(i + 1));
    return hf::group_from_permutations(images, names);
  }
  throw hf::InvalidInputError("unknown group file type: " + type);
}

std::vector<int> parse_seeds(const std::string& text, const hf::FiniteGroup& g) {
  std::vector<int> seeds;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    auto it = std::find(g.generator_names.begin(), g.generator_names.end(), tok);
    if (it != g.generator_names.end()) {
      seeds.push_back(g.generators[static_cast<std::size_t>(it - g.generator_names.begin())]);
      continue;
    }
    bool numeric = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
    if (!numeric) throw hf::InvalidInputError("unknown seed: " + tok);
    int idx = std::stoi(tok);  // 1-based element index
    if (idx < 1 || idx > g.order) throw hf::InvalidInputError("seed index out of range: " + tok);
    seeds.push_back(idx - 1);
  }
  if (seeds.empty()) throw hf::InvalidInputError("no seeds given");
  return seeds;
}

hf::Resolution default_resolution(const hf::HyperconifoldClass& cls, const GlobalOptions& g) {
  if (cls.n == 1) return hf::enumerate_crepant_resolutions(cls, g.enum_bound).at(0);
  return hf::crepant_resolution(cls, parse_seed_order(g.seed_order));
}

int run_classify(const GlobalOptions& g, std::int64_t n, std::int64_t k) {
  hf::HyperconifoldClass c = hf::canonical_form(n, k);
  hf::Json payload = hf::to_json(c);
  hf::ToricDiagram d = hf::diagram_of(c.n, c.k);
  payload["diagram_vertices"] = hf::to_json(d)["vertices"];
  hf::Json inputs;
  inputs["n"] = n;
  inputs["k"] = k;
  emit(g, hf::dump_report(hf::envelope("classify", inputs, payload)));
  return 0;
}

int run_diagram(const GlobalOptions& g, std::int64_t n, std::int64_t k,
                const std::string& resolve) {
  hf::HyperconifoldClass c = hf::canonical_form(n, k);
  std::int64_t k_eff = c.n == 1 ? 0 : hf::mod_pos(k, c.n);
  hf::ToricDiagram d;
  if (resolve.empty()) {
    d = hf::diagram_of(c.n, k_eff);
  } else if (resolve == "star") {
    hf::HyperconifoldClass wc{c.n, k_eff, c.orbit};
    d = hf::height_one_slice(hf::crepant_resolution(wc, parse_seed_order(g.seed_order)).fan);
  } else {
    int idx = std::stoi(resolve);
    hf::HyperconifoldClass wc{c.n, k_eff, c.orbit};
    auto all = hf::enumerate_crepant_resolutions(wc, g.enum_bound);
    if (idx < 1 || idx > static_cast<int>(all.size()))
      throw hf::InvalidInputError("resolution index out of range");
    d = hf::height_one_slice(all[static_cast<std::size_t>(idx - 1)].fan);
  }
  if (g.format == "svg") {
    emit(g, hf::diagram_svg(d));
    return 0;
  }
  if (g.format != "json" && g.format != "text")
    throw hf::InvalidInputError("unknown format: " + g.format);
  hf::Json inputs;
  inputs["n"] = n;
  inputs["k"] = k;
  if (!resolve.empty()) inputs["resolve"] = resolve;
  emit(g, hf::dump_report(hf::envelope("diagram", inputs, hf::to_json(d))));
  return 0;
}

int run_resolve(const GlobalOptions& g, std::int64_t n, std::int64_t k, bool enumerate) {
  hf::HyperconifoldClass canon = hf::canonical_form(n, k);
  hf::HyperconifoldClass c{canon.n, canon.n == 1 ? 0 : hf::mod_pos(k, canon.n), canon.orbit};
  hf::Json payload;
  payload["class"] = hf::to_json(canon);
  hf::Json list = hf::Json::array();
  if (enumerate) {
    auto all = hf::enumerate_crepant_resolutions(c, g.enum_bound);
    for (std::size_t i = 0; i < all.size(); ++i)
      list.push_back(hf::resolution_report(all[i], static_cast<int>(i + 1)));
  } else {
    list.push_back(hf::resolution_report(default_resolution(c, g), 1));
  }
  payload["resolutions"] = list;
  payload["count"] = list.size();
  hf::Json inputs;
  inputs["n"] = n;
  inputs["k"] = k;
  inputs["enumerate"] = enumerate;
  emit(g, hf::dump_report(hf::envelope("resolve", inputs, payload)));
  return 0;
}

int run_mirror(const GlobalOptions& g, std::int64_t n, std::int64_t k) {
  hf::HyperconifoldClass canon = hf::canonical_form(n, k);
  hf::HyperconifoldClass c{canon.n, canon.n == 1 ? 0 : hf::mod_pos(k, canon.n), canon.orbit};
  hf::MirrorGeometry mg = hf::mirror_polynomial(c);
  std::vector<hf::NodeCertificate> nodes = hf::mirror_nodes(mg);
  hf::Json payload = hf::to_json(mg);
  hf::Json nj = hf::Json::array();
  for (const auto& cert : nodes) nj.push_back(hf::to_json(cert));
  payload["nodes"] = nj;
  payload["node_count"] = nodes.size();
  std::vector<std::string> warnings;
  hf::Json oracle;
  if (c.n <= 6) {
    auto clusters = hf::independent_node_search(mg, 32);
    oracle["status"] = "ok";
    oracle["clusters"] = clusters.size();
    oracle["matches"] = clusters.size() == nodes.size();
    if (clusters.empty()) warnings.push_back("node search converged from no start");
  } else {
    oracle["status"] = "skipped";
  }
  payload["oracle"] = oracle;
  hf::Json inputs;
  inputs["n"] = n;
  inputs["k"] = k;
  emit(g, hf::dump_report(hf::envelope("mirror", inputs, payload, warnings)));
  return 0;
}

int run_transition(const GlobalOptions& g, std::int64_t n, std::int64_t k, std::int64_t h11,
                   std::int64_t h21, const std::string& group_file, const std::string& seeds) {
  hf::HyperconifoldClass canon = hf::canonical_form(n, k);
  hf::HyperconifoldClass c{canon.n, canon.n == 1 ? 0 : hf::mod_pos(k, canon.n), canon.orbit};
  hf::FiniteGroup grp = load_group(group_file);
  std::vector<int> seed_elems = parse_seeds(seeds, grp);
  hf::Resolution r = default_resolution(c, g);
  hf::TransitionReport rep =
      hf::transition_report(c, hf::HodgeData{h11, h21}, grp, seed_elems, r);
  hf::Json inputs;
  inputs["n"] = n;
  inputs["k"] = k;
  inputs["h11"] = h11;
  inputs["h21"] = h21;
  inputs["group_file"] = group_file;
  inputs["seeds"] = seeds;
  emit(g, hf::dump_report(hf::envelope("transition", inputs, hf::to_json(rep), rep.warnings)));
  return 0;
}

int run_identify(const GlobalOptions& g, const std::string& matrix_file, std::int64_t bound) {
  hf::Json j = load_json_file(matrix_file);
  if (!j.contains("matrix")) throw hf::InvalidInputError("matrix file is missing \"matrix\"");
  hf::Mat4 m;
  const auto& rows = j["matrix"];
  if (!rows.is_array() || rows.size() != 4)
    throw hf::InvalidInputError("matrix must be 4x4 integer");
  for (int i = 0; i < 4; ++i) {
    if (!rows[static_cast<std::size_t>(i)].is_array() || rows[static_cast<std::size_t>(i)].size() != 4)
      throw hf::InvalidInputError("matrix must be 4x4 integer");
    for (int c = 0; c < 4; ++c)
      m(i, c) = hf::Integer(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get<std::int64_t>());
  }
  hf::MatrixIdentification id = hf::identify_from_matrix(m, bound);
  hf::Json inputs;
  inputs["matrix_file"] = matrix_file;
  emit(g, hf::dump_report(hf::envelope("identify", inputs, hf::to_json(id))));
  return 0;
}

int run_scan(const GlobalOptions& g, std::int64_t n_max) {
  auto actions = hf::exceptional_scan(n_max);
  hf::Json payload;
  payload["n_max"] = n_max;
  hf::Json list = hf::Json::array();
  for (const auto& a : actions) list.push_back(hf::to_json(a));
  payload["actions"] = list;
  payload["count"] = actions.size();
  hf::Json inputs;
  inputs["n_max"] = n_max;
  emit(g, hf::dump_report(hf::envelope("scan-exceptional", inputs, payload)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric toolkit for Z_n-hyperconifold singularities"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format: json|svg|text")->capture_default_str();
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--seed-order", g.seed_order,
                 "Star subdivision order, comma-separated permutation of 1..n-1");
  app.add_option("--enum-bound", g.enum_bound, "Triangulation enumeration bound")
      ->capture_default_str();

  std::int64_t n = 0, k = 0, h11 = 0, h21 = 0, n_max = 20, order_bound = 1000;
  bool enumerate = false;
  std::string resolve_opt, group_file, seeds, matrix_file;

  CLI::App* c_classify = app.add_subcommand("classify", "Canonical form, orbit and lens space");
  c_classify->fallthrough();
  c_classify->add_option("--n", n)->required();
  c_classify->add_option("--k", k)->required();

  CLI::App* c_diagram = app.add_subcommand("diagram", "Toric diagram as JSON or SVG");
  c_diagram->fallthrough();
  c_diagram->add_option("--n", n)->required();
  c_diagram->add_option("--k", k)->required();
  c_diagram->add_option("--resolve", resolve_opt, "Draw a triangulation: 'star' or an index");

  CLI::App* c_resolve = app.add_subcommand("resolve", "Crepant resolutions and ample cones");
  c_resolve->fallthrough();
  c_resolve->add_option("--n", n)->required();
  c_resolve->add_option("--k", k)->required();
  c_resolve->add_flag("--enumerate", enumerate, "Enumerate all crepant resolutions");

  CLI::App* c_mirror = app.add_subcommand("mirror", "Local mirror geometry and its nodes");
  c_mirror->fallthrough();
  c_mirror->add_option("--n", n)->required();
  c_mirror->add_option("--k", k)->required();

  CLI::App* c_transition = app.add_subcommand("transition", "Topological transition report");
  c_transition->fallthrough();
  c_transition->add_option("--n", n)->required();
  c_transition->add_option("--k", k)->required();
  c_transition->add_option("--h11", h11)->required();
  c_transition->add_option("--h21", h21)->required();
  c_transition->add_option("--group-file", group_file)->required();
  c_transition->add_option("--seeds", seeds)->required();

  CLI::App* c_identify = app.add_subcommand("identify", "Class of a linearized group action");
  c_identify->fallthrough();
  c_identify->add_option("--matrix-file", matrix_file)->required();
  c_identify->add_option("--order-bound", order_bound)->capture_default_str();

  CLI::App* c_scan = app.add_subcommand("scan-exceptional", "Exchange-type hyperconifold actions");
  c_scan->fallthrough();
  c_scan->add_option("--n-max", n_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.format != "json" && g.format != "svg" && g.format != "text")
      throw hf::InvalidInputError("unknown format: " + g.format);
    if (c_classify->parsed()) return run_classify(g, n, k);
    if (c_diagram->parsed()) return run_diagram(g, n, k, resolve_opt);
    if (c_resolve->parsed()) return run_resolve(g, n, k, enumerate);
    if (c_mirror->parsed()) return run_mirror(g, n, k);
    if (c_transition->parsed()) return run_transition(g, n, k, h11, h21, group_file, seeds);
    if (c_identify->parsed()) return run_identify(g, matrix_file, order_bound);
    if (c_scan->parsed()) return run_scan(g, n_max);
    return 2;
  } catch (const hf::ResourceBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const hf::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
