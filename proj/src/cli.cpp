#include "pentaglue/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "pentaglue/certify.hpp"
#include "pentaglue/gluing.hpp"
#include "pentaglue/metric.hpp"
#include "pentaglue/models.hpp"

namespace pentaglue {

namespace {

Gluing read_gluing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GluingError("cannot open " + path);
  return parse_gluing(in);
}

void require_alexandrov(const Gluing& g) {
  const auto check = check_alexandrov(g);
  if (!check) {
    throw GluingError(to_string(*check.failure) + ": " + check.reason);
  }
}

// Writes to `path`, or to `out` if the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

int enumerate_command(int n, const std::string& dir, bool no_bound,
                      std::ostream& out) {
  const auto found = enumerate_gluings(n, {.no_bound = no_bound});
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir + ": " + ec.message());
    for (const auto& g : found) {
      const auto path = std::filesystem::path(dir) / (canonical_code(g) + ".gluing");
      std::ofstream file(path);
      if (!file) throw std::runtime_error("cannot write " + path.string());
      write_gluing(file, g);
      if (!file) throw std::runtime_error("cannot write " + path.string());
    }
  }
  out << found.size() << '\n';
  return kExitOk;
}

int census_command(int n, std::ostream& out) {
  for (const auto& c : vertex_census_solutions(n)) {
    out << c.x << ' ' << c.y << ' ' << c.z << '\n';
  }
  return kExitOk;
}

int metric_command(const std::string& path, std::ostream& out) {
  const Gluing g = read_gluing(path);
  require_alexandrov(g);
  write_geodesic_table(out, all_pairs_geodesics(g));
  return kExitOk;
}

struct CertifyArgs {
  std::string gluing;
  std::string embedding;
  std::string entry;
  bool exact = false;
  double tol_clearance = 1e-12;
  double tol_planarity = 1e-5;
};

int certify_command(const CertifyArgs& args, std::ostream& out,
                    std::ostream& err) {
  std::optional<Gluing> g;
  std::optional<Embedding> emb;
  if (!args.entry.empty()) {
    const auto& entry = catalog_entry(args.entry);
    if (args.exact && entry.name != "P12") {
      throw std::invalid_argument("exact coordinates exist only for P12");
    }
    g = entry.gluing;
    emb = args.exact ? exact_dodecahedron() : entry.embedding;
  } else {
    if (args.gluing.empty() || args.embedding.empty()) {
      throw std::invalid_argument("certify needs a gluing and an embedding file, or --entry");
    }
    if (args.exact) throw std::invalid_argument("--exact needs --entry P12");
    g = read_gluing(args.gluing);
    emb = load_embedding(args.embedding);
  }
  require_alexandrov(*g);

  CertifyOptions options;
  options.clearance_margin = args.tol_clearance;
  const Certificate cert = certify_all(*g, *emb, options);
  write_certificate(out, cert);
  for (const auto& face : emb->faces()) {
    if (face.size() <= 3) continue;
    out << "face";
    for (const int v : face) out << ' ' << v;
    out << (verify_face_planarity(*emb, face, args.tol_planarity) ? " PLANAR\n"
                                                                   : " NONPLANAR\n");
  }
  if (!cert.reason.empty()) err << "inconclusive: " << cert.reason << '\n';
  return cert.all_certified() ? kExitOk : kExitInconclusive;
}

int export_command(const std::string& name, const std::string& format,
                   const std::string& path, std::ostream& out) {
  const auto& entry = catalog_entry(name);
  std::ostringstream text;
  if (format == "obj") {
    text << export_obj(entry.embedding);
  } else if (format == "svg") {
    const auto table = all_pairs_geodesics(entry.gluing);
    const auto creases = crease_chords(table, entry.embedding.edges());
    text << export_net_svg(entry.gluing, creases);
  } else if (format == "gluing") {
    write_gluing(text, entry.gluing);
  } else {
    write_embedding(text, entry.embedding);
  }
  emit(text.str(), path, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Edge-to-edge gluings of regular pentagons", "pentaglue"};
  app.require_subcommand(1);

  int n = 0;
  std::string dir;
  bool no_bound = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Count (and optionally write) all valid gluings of n pentagons");
  enumerate->add_option("n", n, "Number of pentagons")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--out", dir, "Directory for one gluing file per result");
  enumerate->add_flag("--no-bound", no_bound, "Search even when n > 12");

  auto* census = app.add_subcommand("census", "Vertex curvature censuses for n pentagons");
  census->add_option("n", n, "Number of pentagons")->required()->check(CLI::PositiveNumber);

  std::string gluing_path;
  auto* metric = app.add_subcommand("metric", "Geodesic distances and angles of a gluing");
  metric->add_option("gluing", gluing_path, "Gluing file")->required();

  CertifyArgs cargs;
  auto* certify = app.add_subcommand("certify", "Certify the edges of an embedding");
  certify->add_option("gluing", cargs.gluing, "Gluing file");
  certify->add_option("embedding", cargs.embedding, "Embedding file");
  certify->add_option("--entry", cargs.entry, "Use a catalogue entry instead of files");
  certify->add_flag("--exact", cargs.exact, "Golden-ratio coordinates (P12 only)");
  certify->add_option("--tol-clearance", cargs.tol_clearance,
                      "Margin by which clearance must exceed r")
      ->capture_default_str();
  certify->add_option("--tol-planarity", cargs.tol_planarity,
                      "Planarity tolerance for non-triangular faces")
      ->capture_default_str();

  std::string entry, format, path;
  auto* exporter = app.add_subcommand("export", "Write a catalogue entry");
  exporter->add_option("entry", entry, "Catalogue name, e.g. P4,2")->required();
  exporter->add_option("format", format, "obj, svg, gluing or embedding")
      ->required()
      ->check(CLI::IsMember({"obj", "svg", "gluing", "embedding"}));
  exporter->add_option("--out", path, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (enumerate->parsed()) return enumerate_command(n, dir, no_bound, out);
    if (census->parsed()) return census_command(n, out);
    if (metric->parsed()) return metric_command(gluing_path, out);
    if (certify->parsed()) return certify_command(cargs, out, err);
    return export_command(entry, format, path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace pentaglue
