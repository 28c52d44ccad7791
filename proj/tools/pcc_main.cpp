// pcc command line tool. Links the shared library through its C API only.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcc.h"

namespace {

// exit codes: 0 pass, 1 fail, 2 usage error, 3 guard exceeded
int status_exit(pcc_status st) {
  std::cerr << "error: " << pcc_last_error() << "\n";
  switch (st) {
    case PCC_ERR_GUARD:
      return 3;
    case PCC_ERR_CHECK:
    case PCC_ERR_FAIL:
      return 1;
    default:
      return 2;
  }
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { pcc_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* h = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(h); }
  T** out() { return &h; }
  T* get() const { return h; }
};

using MatrixHandle = Handle<pcc_matrix, pcc_matrix_free>;
using GraphHandle = Handle<pcc_graph, pcc_graph_free>;
using CommHandle = Handle<pcc_comm, pcc_comm_free>;
using BfHandle = Handle<pcc_boolfun, pcc_bf_free>;
using BicliquesHandle = Handle<pcc_bicliques, pcc_bicliques_free>;

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  out << content;
  return 0;
}

// returns -1 when loaded, otherwise the exit code
int load_matrix(const std::string& path, MatrixHandle& h) {
  std::string text;
  if (!read_input(path, text)) return 2;
  const pcc_status st = pcc_matrix_parse(text.c_str(), h.out());
  return st == PCC_OK ? -1 : status_exit(st);
}
int load_graph(const std::string& path, GraphHandle& h) {
  std::string text;
  if (!read_input(path, text)) return 2;
  const pcc_status st = pcc_graph_parse(text.c_str(), h.out());
  return st == PCC_OK ? -1 : status_exit(st);
}
int load_comm(const std::string& path, CommHandle& h) {
  std::string text;
  if (!read_input(path, text)) return 2;
  const pcc_status st = pcc_comm_parse(text.c_str(), h.out());
  return st == PCC_OK ? -1 : status_exit(st);
}
int load_bf(const std::string& path, BfHandle& h) {
  std::string text;
  if (!read_input(path, text)) return 2;
  const pcc_status st = pcc_bf_parse(text.c_str(), h.out());
  return st == PCC_OK ? -1 : status_exit(st);
}
int load_bicliques(const std::string& path, BicliquesHandle& h) {
  std::string text;
  if (!read_input(path, text)) return 2;
  const pcc_status st = pcc_bicliques_parse(text.c_str(), h.out());
  return st == PCC_OK ? -1 : status_exit(st);
}

std::vector<size_t> to_zero_based(const std::vector<size_t>& one_based, bool& ok) {
  std::vector<size_t> out;
  ok = true;
  for (size_t v : one_based) {
    if (v == 0) {
      ok = false;
      return out;
    }
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for partial concept classes, disambiguations, and the "
               "biclique/communication constructions around them"};
  app.require_subcommand(1);

  bool force = false;
  std::uint64_t seed = 0;
  app.add_flag("--force", force, "override size guards");
  app.add_option("--seed", seed, "seed for randomized commands (default 0)");

  if (const char* budget = std::getenv("PCC_MAX_WORK")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(budget, &end, 10);
    if (end && *end == '\0') pcc_set_work_budget(v);
  }

  std::function<int()> action;

  // ---------------- gen ----------------
  auto* gen = app.add_subcommand("gen", "generate concept classes");
  {
    auto* hrd = gen->add_subcommand("hrd", "family whose deterministic fill shatters its tail");
    auto r = std::make_shared<unsigned>(1);
    auto d = std::make_shared<unsigned>(1);
    auto out = std::make_shared<std::string>();
    hrd->add_option("--r", *r, "block width exponent")->required();
    hrd->add_option("--d", *d, "target dimension parameter")->required();
    hrd->add_option("-o,--out", *out, "output file (default stdout)");
    hrd->callback([&action, r, d, out] {
      action = [r, d, out] {
        MatrixHandle m;
        if (const pcc_status st = pcc_gen_hrd(*r, *d, m.out()); st != PCC_OK)
          return status_exit(st);
        StringOut text;
        pcc_matrix_format(m.get(), &text.s);
        return write_output(*out, text.str());
      };
    });

    auto* bc = gen->add_subcommand("biclique-class", "class from an oriented biclique partition");
    auto gpath = std::make_shared<std::string>();
    auto ppath = std::make_shared<std::string>();
    auto bout = std::make_shared<std::string>();
    bc->add_option("--graph", *gpath, "graph file")->required();
    bc->add_option("--partition", *ppath, "bcp file with the oriented bicliques")->required();
    bc->add_option("-o,--out", *bout, "output file (default stdout)");
    bc->callback([&action, gpath, ppath, bout] {
      action = [gpath, ppath, bout] {
        GraphHandle g;
        BicliquesHandle part;
        if (int rc = load_graph(*gpath, g); rc >= 0) return rc;
        if (int rc = load_bicliques(*ppath, part); rc >= 0) return rc;
        MatrixHandle m;
        if (const pcc_status st = pcc_gen_biclique_class(g.get(), part.get(), m.out());
            st != PCC_OK)
          return status_exit(st);
        StringOut text;
        pcc_matrix_format(m.get(), &text.s);
        return write_output(*bout, text.str());
      };
    });
  }

  // ---------------- matrix ----------------
  auto* matrix = app.add_subcommand("matrix", "concept-class operations");
  {
    auto* res = matrix->add_subcommand("restrict", "keep the chosen points");
    auto file = std::make_shared<std::string>();
    auto pts = std::make_shared<std::vector<size_t>>();
    auto out = std::make_shared<std::string>();
    res->add_option("file", *file)->required();
    res->add_option("--points", *pts, "1-based point indices")->required()->delimiter(',');
    res->add_option("-o,--out", *out);
    res->callback([&action, file, pts, out] {
      action = [file, pts, out] {
        MatrixHandle m;
        if (int rc = load_matrix(*file, m); rc >= 0) return rc;
        bool ok = false;
        const std::vector<size_t> zero = to_zero_based(*pts, ok);
        if (!ok) {
          std::cerr << "error: point indices are 1-based\n";
          return 2;
        }
        MatrixHandle r;
        if (const pcc_status st = pcc_matrix_restrict(m.get(), zero.data(), zero.size(), r.out());
            st != PCC_OK)
          return status_exit(st);
        StringOut text;
        pcc_matrix_format(r.get(), &text.s);
        return write_output(*out, text.str());
      };
    });

    auto* du = matrix->add_subcommand("dual", "exchange points and concepts");
    auto dfile = std::make_shared<std::string>();
    auto dout = std::make_shared<std::string>();
    du->add_option("file", *dfile)->required();
    du->add_option("-o,--out", *dout);
    du->callback([&action, dfile, dout] {
      action = [dfile, dout] {
        MatrixHandle m;
        if (int rc = load_matrix(*dfile, m); rc >= 0) return rc;
        MatrixHandle r;
        if (const pcc_status st = pcc_matrix_dual(m.get(), r.out()); st != PCC_OK)
          return status_exit(st);
        StringOut text;
        pcc_matrix_format(r.get(), &text.s);
        return write_output(*dout, text.str());
      };
    });

    auto* cp = matrix->add_subcommand("contains-pattern", "order-preserving submatrix search");
    auto cfile = std::make_shared<std::string>();
    auto pfile = std::make_shared<std::string>();
    cp->add_option("file", *cfile)->required();
    cp->add_option("--pattern", *pfile, "pcc file with a star-free pattern")->required();
    cp->callback([&action, cfile, pfile] {
      action = [cfile, pfile] {
        MatrixHandle m, p;
        if (int rc = load_matrix(*cfile, m); rc >= 0) return rc;
        if (int rc = load_matrix(*pfile, p); rc >= 0) return rc;
        int found = 0;
        StringOut witness;
        if (const pcc_status st =
                pcc_matrix_contains_pattern(m.get(), p.get(), &found, &witness.s);
            st != PCC_OK)
          return status_exit(st);
        if (found)
          std::cout << "{\"found\":true,\"witness\":" << witness.str() << "}\n";
        else
          std::cout << "{\"found\":false}\n";
        return 0;
      };
    });

    auto* isd = matrix->add_subcommand("is-disamb", "check one class disambiguates another");
    auto partial = std::make_shared<std::string>();
    auto total = std::make_shared<std::string>();
    isd->add_option("partial", *partial)->required();
    isd->add_option("total", *total)->required();
    isd->callback([&action, partial, total] {
      action = [partial, total] {
        MatrixHandle m, t;
        if (int rc = load_matrix(*partial, m); rc >= 0) return rc;
        if (int rc = load_matrix(*total, t); rc >= 0) return rc;
        int ok = 0;
        StringOut violation;
        if (const pcc_status st =
                pcc_matrix_is_disambiguation(m.get(), t.get(), &ok, &violation.s);
            st != PCC_OK)
          return status_exit(st);
        if (ok)
          std::cout << "{\"disambiguation\":true}\n";
        else
          std::cout << "{\"disambiguation\":false,\"violation\":" << violation.str() << "}\n";
        return 0;
      };
    });

    for (const char* which : {"distinct-rows", "distinct-cols"}) {
      auto* dr = matrix->add_subcommand(which, "count distinct rows/columns of a total class");
      auto rfile = std::make_shared<std::string>();
      auto w = std::make_shared<std::string>(which);
      dr->add_option("file", *rfile)->required();
      dr->callback([&action, rfile, w] {
        action = [rfile, w] {
          MatrixHandle m;
          if (int rc = load_matrix(*rfile, m); rc >= 0) return rc;
          size_t count = 0;
          const pcc_status st = *w == "distinct-rows"
                                    ? pcc_matrix_distinct_rows(m.get(), &count)
                                    : pcc_matrix_distinct_cols(m.get(), &count);
          if (st != PCC_OK) return status_exit(st);
          std::cout << count << "\n";
          return 0;
        };
      });
    }
  }

  // ---------------- dim ----------------
  auto* dim = app.add_subcommand("dim", "exact dimension computations");
  {
    auto* vc = dim->add_subcommand("vc", "VC dimension with a shattered-set witness");
    auto vfile = std::make_shared<std::string>();
    vc->add_option("file", *vfile)->required();
    vc->callback([&action, vfile] {
      action = [vfile] {
        MatrixHandle m;
        if (int rc = load_matrix(*vfile, m); rc >= 0) return rc;
        int d = 0;
        StringOut witness;
        if (const pcc_status st = pcc_vc_dim(m.get(), &d, &witness.s); st != PCC_OK)
          return status_exit(st);
        std::cout << witness.str() << "\n";
        return 0;
      };
    });

    auto* ld = dim->add_subcommand("ld", "Littlestone dimension");
    auto lfile = std::make_shared<std::string>();
    ld->add_option("file", *lfile)->required();
    ld->callback([&action, lfile] {
      action = [lfile] {
        MatrixHandle m;
        if (int rc = load_matrix(*lfile, m); rc >= 0) return rc;
        int d = 0;
        if (const pcc_status st = pcc_ld_dim(m.get(), &d); st != PCC_OK) return status_exit(st);
        std::cout << "{\"dimension\":" << d << ",\"kind\":\"ld\"}\n";
        return 0;
      };
    });

    auto* oracle = dim->add_subcommand("ld-oracle", "exhaustive shattered-tree search");
    auto ofile = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(0);
    oracle->add_option("file", *ofile)->required();
    oracle->add_option("--depth", *depth, "tree height to search")->required();
    oracle->callback([&action, &force, ofile, depth] {
      action = [&force, ofile, depth] {
        MatrixHandle m;
        if (int rc = load_matrix(*ofile, m); rc >= 0) return rc;
        int shattered = 0;
        StringOut witness;
        if (const pcc_status st =
                pcc_ld_tree_oracle(m.get(), *depth, force ? 1 : 0, &shattered, &witness.s);
            st != PCC_OK)
          return status_exit(st);
        if (shattered)
          std::cout << witness.str() << "\n";
        else
          std::cout << "{\"shattered\":false,\"depth\":" << *depth << "}\n";
        return 0;
      };
    });

    auto* dv = dim->add_subcommand("dual-vc", "dual VC dimension and its bound");
    auto dvfile = std::make_shared<std::string>();
    dv->add_option("file", *dvfile)->required();
    dv->callback([&action, dvfile] {
      action = [dvfile] {
        MatrixHandle m;
        if (int rc = load_matrix(*dvfile, m); rc >= 0) return rc;
        int vcv = 0, dual = 0, holds = 0;
        if (const pcc_status st = pcc_dual_vc_check(m.get(), &vcv, &dual, &holds); st != PCC_OK)
          return status_exit(st);
        std::cout << "{\"vc\":" << vcv << ",\"dual_vc\":" << dual
                  << ",\"bound_holds\":" << (holds ? "true" : "false") << "}\n";
        return holds ? 0 : 1;
      };
    });
  }

  // ---------------- disambiguate ----------------
  auto* dis = app.add_subcommand("disambiguate", "fill Stars");
  {
    auto* soa = dis->add_subcommand("soa", "deterministic dimension-guided fill with trace");
    auto sfile = std::make_shared<std::string>();
    auto sout = std::make_shared<std::string>();
    auto order = std::make_shared<std::vector<size_t>>();
    soa->add_option("file", *sfile)->required();
    soa->add_option("--order", *order, "1-based processing order over the points")->delimiter(',');
    soa->add_option("-o,--out", *sout, "write the filled class here as well");
    soa->callback([&action, sfile, sout, order] {
      action = [sfile, sout, order] {
        MatrixHandle m;
        if (int rc = load_matrix(*sfile, m); rc >= 0) return rc;
        bool ok = true;
        std::vector<size_t> zero;
        if (!order->empty()) {
          zero = to_zero_based(*order, ok);
          if (!ok) {
            std::cerr << "error: order indices are 1-based\n";
            return 2;
          }
        }
        StringOut trace;
        MatrixHandle out;
        if (const pcc_status st =
                pcc_soa_disambiguate(m.get(), zero.empty() ? nullptr : zero.data(), zero.size(),
                                     &trace.s, out.out());
            st != PCC_OK)
          return status_exit(st);
        std::cout << trace.str() << "\n";
        if (!sout->empty()) {
          StringOut text;
          pcc_matrix_format(out.get(), &text.s);
          return write_output(*sout, text.str());
        }
        return 0;
      };
    });

    auto* mv = dis->add_subcommand("min-vc", "minimum-VC completion by enumeration");
    auto mfile = std::make_shared<std::string>();
    auto mout = std::make_shared<std::string>();
    mv->add_option("file", *mfile)->required();
    mv->add_option("-o,--out", *mout, "write the witness completion here");
    mv->callback([&action, &force, mfile, mout] {
      action = [&force, mfile, mout] {
        MatrixHandle m;
        if (int rc = load_matrix(*mfile, m); rc >= 0) return rc;
        int vc_min = 0;
        MatrixHandle witness;
        if (const pcc_status st =
                pcc_min_vc_disambiguation(m.get(), force ? 1 : 0, &vc_min, witness.out());
            st != PCC_OK)
          return status_exit(st);
        std::cout << "{\"vc_min\":" << vc_min << "}\n";
        if (!mout->empty()) {
          StringOut text;
          pcc_matrix_format(witness.get(), &text.s);
          return write_output(*mout, text.str());
        }
        return 0;
      };
    });

    auto* gp = dis->add_subcommand("growth", "max distinct rows of filled restrictions");
    auto gfile = std::make_shared<std::string>();
    auto sizes = std::make_shared<std::vector<size_t>>();
    gp->add_option("file", *gfile)->required();
    gp->add_option("--sizes", *sizes, "restriction sizes k")->required()->delimiter(',');
    gp->callback([&action, &seed, gfile, sizes] {
      action = [&seed, gfile, sizes] {
        MatrixHandle m;
        if (int rc = load_matrix(*gfile, m); rc >= 0) return rc;
        StringOut json;
        if (const pcc_status st =
                pcc_growth_profile(m.get(), sizes->data(), sizes->size(), seed, &json.s);
            st != PCC_OK)
          return status_exit(st);
        std::cout << json.str() << "\n";
        return 0;
      };
    });
  }

  // ---------------- graph ----------------
  auto* graph = app.add_subcommand("graph", "exact graph solvers");
  {
    for (const char* name : {"chi", "bp", "bp-bound"}) {
      auto* sub = graph->add_subcommand(
          name, std::string(name) == "chi"      ? "chromatic number with coloring"
                : std::string(name) == "bp"     ? "biclique partition number with witness"
                                                : "spectral lower bound on bp");
      auto file = std::make_shared<std::string>();
      auto cmd = std::make_shared<std::string>(name);
      sub->add_option("file", *file)->required();
      sub->callback([&action, &force, file, cmd] {
        action = [&force, file, cmd] {
          GraphHandle g;
          if (int rc = load_graph(*file, g); rc >= 0) return rc;
          if (*cmd == "chi") {
            int chi = 0;
            StringOut coloring;
            if (const pcc_status st =
                    pcc_chromatic_number(g.get(), force ? 1 : 0, &chi, &coloring.s);
                st != PCC_OK)
              return status_exit(st);
            std::cout << coloring.str() << "\n";
          } else if (*cmd == "bp") {
            int bp = 0;
            BicliquesHandle part;
            if (const pcc_status st =
                    pcc_biclique_partition_number(g.get(), force ? 1 : 0, &bp, part.out());
                st != PCC_OK)
              return status_exit(st);
            StringOut text;
            pcc_bicliques_format(part.get(), &text.s);
            std::cout << "{\"bp\":" << bp << "}\n" << text.str();
          } else {
            int bound = 0;
            if (const pcc_status st = pcc_bp_spectral_lower_bound(g.get(), &bound); st != PCC_OK)
              return status_exit(st);
            std::cout << "{\"bp_lower_bound\":" << bound << "}\n";
          }
          return 0;
        };
      });
    }

    auto* val = graph->add_subcommand("validate-family", "check a biclique family against a graph");
    auto vfile = std::make_shared<std::string>();
    auto vpart = std::make_shared<std::string>();
    auto vmode = std::make_shared<std::string>("partition");
    val->add_option("file", *vfile)->required();
    val->add_option("--family", *vpart, "bcp file")->required();
    val->add_option("--mode", *vmode, "partition | cover | cover-le-2");
    val->callback([&action, vfile, vpart, vmode] {
      action = [vfile, vpart, vmode] {
        GraphHandle g;
        BicliquesHandle fam;
        if (int rc = load_graph(*vfile, g); rc >= 0) return rc;
        if (int rc = load_bicliques(*vpart, fam); rc >= 0) return rc;
        int ok = 0;
        StringOut violation;
        if (const pcc_status st = pcc_validate_biclique_family(g.get(), fam.get(), vmode->c_str(),
                                                               &ok, &violation.s);
            st != PCC_OK)
          return status_exit(st);
        if (ok)
          std::cout << "{\"valid\":true}\n";
        else
          std::cout << "{\"valid\":false,\"violation\":" << violation.str() << "}\n";
        return ok ? 0 : 1;
      };
    });
  }

  // ---------------- comm ----------------
  auto* comm = app.add_subcommand("comm", "communication matrices and Boolean functions");
  {
    auto* cov = comm->add_subcommand("cov", "minimum monochromatic rectangle cover/partition");
    auto cfile = std::make_shared<std::string>();
    auto b = std::make_shared<int>(0);
    auto part = std::make_shared<bool>(false);
    cov->add_option("file", *cfile)->required();
    cov->add_option("--b", *b, "target value 0/1")->required();
    cov->add_flag("--partition", *part, "exact partition instead of cover");
    cov->callback([&action, &force, cfile, b, part] {
      action = [&force, cfile, b, part] {
        CommHandle m;
        if (int rc = load_comm(*cfile, m); rc >= 0) return rc;
        int count = 0;
        StringOut rects;
        if (const pcc_status st = pcc_cover_number(m.get(), *b, *part ? "partition" : "cover",
                                                   force ? 1 : 0, &count, &rects.s);
            st != PCC_OK)
          return status_exit(st);
        std::cout << "{\"count\":" << count << ",\"rectangles\":" << rects.str() << "}\n";
        return 0;
      };
    });

    auto* cert = comm->add_subcommand("cert", "certificate complexity");
    auto ctfile = std::make_shared<std::string>();
    auto ctb = std::make_shared<int>(0);
    cert->add_option("file", *ctfile)->required();
    cert->add_option("--b", *ctb, "target value 0/1")->required();
    cert->callback([&action, &force, ctfile, ctb] {
      action = [&force, ctfile, ctb] {
        BfHandle f;
        if (int rc = load_bf(*ctfile, f); rc >= 0) return rc;
        int cer = 0;
        StringOut worst;
        if (const pcc_status st =
                pcc_cert_complexity(f.get(), *ctb, force ? 1 : 0, &cer, &worst.s);
            st != PCC_OK)
          return status_exit(st);
        std::cout << "{\"cer\":" << cer;
        if (worst.s) std::cout << ",\"worst_input\":\"" << worst.str() << "\"";
        std::cout << "}\n";
        return 0;
      };
    });

    auto* uc = comm->add_subcommand("uc", "unambiguous certificate complexity");
    auto ucfile = std::make_shared<std::string>();
    auto ucb = std::make_shared<int>(0);
    auto ucmode = std::make_shared<std::string>("partition");
    uc->add_option("file", *ucfile)->required();
    uc->add_option("--b", *ucb, "target value 0/1")->required();
    uc->add_option("--mode", *ucmode, "partition (default) | distinct");
    uc->callback([&action, &force, ucfile, ucb, ucmode] {
      action = [&force, ucfile, ucb, ucmode] {
        BfHandle f;
        if (int rc = load_bf(*ucfile, f); rc >= 0) return rc;
        int ucv = 0;
        StringOut family;
        if (const pcc_status st = pcc_uc_complexity(f.get(), *ucb, ucmode->c_str(), force ? 1 : 0,
                                                    &ucv, &family.s);
            st != PCC_OK)
          return status_exit(st);
        std::cout << "{\"uc\":" << ucv << ",\"family\":" << family.str() << "}\n";
        return 0;
      };
    });

    auto* lp = comm->add_subcommand("lift-partition",
                                    "certificate-driven rectangle partition of a lifted matrix");
    auto lpf = std::make_shared<std::string>();
    auto lpg = std::make_shared<std::string>();
    auto lpb = std::make_shared<int>(1);
    lp->add_option("--f", *lpf, "bf file")->required();
    lp->add_option("--gadget", *lpg, "comm file")->required();
    lp->add_option("--b", *lpb, "target value 0/1")->required();
    lp->callback([&action, &force, lpf, lpg, lpb] {
      action = [&force, lpf, lpg, lpb] {
        BfHandle f;
        CommHandle g;
        if (int rc = load_bf(*lpf, f); rc >= 0) return rc;
        if (int rc = load_comm(*lpg, g); rc >= 0) return rc;
        StringOut rects;
        if (const pcc_status st =
                pcc_certificates_to_partition(f.get(), *lpb, g.get(), force ? 1 : 0, &rects.s);
            st != PCC_OK)
          return status_exit(st);
        std::cout << "{\"rectangles\":" << rects.str() << "}\n";
        return 0;
      };
    });
  }

  // ---------------- lift ----------------
  {
    auto* lift = app.add_subcommand("lift", "compose a function with a two-party gadget");
    auto lf = std::make_shared<std::string>();
    auto lg = std::make_shared<std::string>();
    auto lout = std::make_shared<std::string>();
    lift->add_option("--f", *lf, "bf file")->required();
    lift->add_option("--gadget", *lg, "comm file")->required();
    lift->add_option("-o,--out", *lout);
    lift->callback([&action, &force, lf, lg, lout] {
      action = [&force, lf, lg, lout] {
        BfHandle f;
        CommHandle g;
        if (int rc = load_bf(*lf, f); rc >= 0) return rc;
        if (int rc = load_comm(*lg, g); rc >= 0) return rc;
        CommHandle out;
        if (const pcc_status st = pcc_lift(f.get(), g.get(), force ? 1 : 0, out.out());
            st != PCC_OK)
          return status_exit(st);
        StringOut text;
        pcc_comm_format(out.get(), &text.s);
        return write_output(*lout, text.str());
      };
    });
  }

  // ---------------- ass ----------------
  auto* ass = app.add_subcommand("ass", "biclique-partition vs chromatic-number separation");
  {
    auto* pipe = ass->add_subcommand("pipeline", "matrix to separation graph with checked steps");
    auto pfile = std::make_shared<std::string>();
    auto gout = std::make_shared<std::string>();
    auto pout = std::make_shared<std::string>();
    pipe->add_option("file", *pfile)->required();
    pipe->add_option("--graph-out", *gout, "write the output graph here");
    pipe->add_option("--partition-out", *pout, "write the output bicliques here");
    pipe->callback([&action, &force, pfile, gout, pout] {
      action = [&force, pfile, gout, pout] {
        CommHandle m;
        if (int rc = load_comm(*pfile, m); rc >= 0) return rc;
        StringOut report;
        GraphHandle g;
        BicliquesHandle part;
        if (const pcc_status st =
                pcc_ass_pipeline(m.get(), force ? 1 : 0, &report.s, g.out(), part.out());
            st != PCC_OK)
          return status_exit(st);
        std::cout << report.str() << "\n";
        if (!gout->empty()) {
          StringOut text;
          pcc_graph_format(g.get(), &text.s);
          if (int rc = write_output(*gout, text.str()); rc != 0) return rc;
        }
        if (!pout->empty()) {
          StringOut text;
          pcc_bicliques_format(part.get(), &text.s);
          if (int rc = write_output(*pout, text.str()); rc != 0) return rc;
        }
        return 0;
      };
    });

    auto* cg = ass->add_subcommand("graph", "conflict graph of the zero cells");
    auto cgfile = std::make_shared<std::string>();
    auto cgdot = std::make_shared<bool>(false);
    cg->add_option("file", *cgfile)->required();
    cg->add_flag("--dot", *cgdot, "emit DOT instead of the graph format");
    cg->callback([&action, &force, cgfile, cgdot] {
      action = [&force, cgfile, cgdot] {
        CommHandle m;
        if (int rc = load_comm(*cgfile, m); rc >= 0) return rc;
        GraphHandle g;
        if (const pcc_status st = pcc_ass_conflict_graph(m.get(), force ? 1 : 0, g.out());
            st != PCC_OK)
          return status_exit(st);
        StringOut text;
        if (*cgdot)
          pcc_graph_to_dot(g.get(), &text.s);
        else
          pcc_graph_format(g.get(), &text.s);
        std::cout << text.str();
        return 0;
      };
    });
  }

  // ---------------- verify ----------------
  {
    auto* verify = app.add_subcommand("verify", "run a named desk-scale check");
    auto id = std::make_shared<std::string>();
    auto trials = std::make_shared<long long>(-1);
    auto npts = std::make_shared<long long>(-1);
    auto concepts = std::make_shared<long long>(-1);
    auto report_path = std::make_shared<std::string>();
    auto artifact_dir = std::make_shared<std::string>(".");
    verify->add_option("check", *id,
                       "fig1 | hrd-ld | hrd-soa-vc | ssp-partial | vc-le-ld | biclique-ld2 | "
                       "chi-columns | lemma-ass | dual-vc | gp-bp")
        ->required();
    verify->add_option("--trials", *trials, "override trial count");
    verify->add_option("--n", *npts, "override max point count");
    verify->add_option("--concepts", *concepts, "override max concept count");
    verify->add_option("--report", *report_path, "report file (default pcc_verify_<id>.json)");
    verify->add_option("--artifact-dir", *artifact_dir, "where counterexamples are written");
    verify->callback([&action, &seed, id, trials, npts, concepts, report_path, artifact_dir] {
      action = [&seed, id, trials, npts, concepts, report_path, artifact_dir] {
        std::string params = "{";
        bool first = true;
        auto add = [&](const char* key, long long v) {
          if (v < 0) return;
          if (!first) params += ",";
          params += std::string("\"") + key + "\":" + std::to_string(v);
          first = false;
        };
        add("trials", *trials);
        add("n", *npts);
        add("concepts", *concepts);
        params += "}";

        StringOut report;
        int pass = 0;
        const pcc_status st = pcc_verify_run(id->c_str(), params.c_str(), seed,
                                             artifact_dir->c_str(), &report.s, &pass);
        if (st != PCC_OK) return status_exit(st);
        const std::string path =
            report_path->empty() ? *artifact_dir + "/pcc_verify_" + *id + ".json" : *report_path;
        std::ofstream out(path, std::ios::binary);
        if (out) out << report.str();
        std::cout << report.str();
        return pass ? 0 : 1;
      };
    });
  }

  // ---------------- convert ----------------
  {
    auto* conv = app.add_subcommand("convert", "convert between the text formats");
    auto input = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    conv->add_option("file", *input)->required();
    conv->add_option("--to", *target, "pcc | comm | graph | bf | bcp | dot | json")->required();
    conv->add_option("-o,--out", *out);
    conv->callback([&action, input, target, out] {
      action = [input, target, out] {
        std::string text;
        if (!read_input(*input, text)) return 2;
        StringOut converted;
        if (const pcc_status st = pcc_convert(text.c_str(), target->c_str(), &converted.s);
            st != PCC_OK)
          return status_exit(st);
        return write_output(*out, converted.str());
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!action) {
    std::cerr << "error: no action selected\n";
    return 2;
  }
  return action();
}
