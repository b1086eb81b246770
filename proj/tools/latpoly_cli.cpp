// latpoly command line driver.
//
// Subcommands:
//   classify     enumerate smooth polytope classes from seed fans
//   verify       check smoothness, very-ampleness and pairwise equivalence
//   hilbert      Hilbert basis of a pointed rational cone
//   canonical    canonical form of a smooth polytope
//   triangulate  search for a flag unimodular regular triangulation
//   examples     emit a named example polytope with a property report
//
// All output is deterministic: repeated runs with identical flags produce
// byte-identical files.

#include <CLI11.hpp>
#include <latpoly/latpoly.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latpoly;

int default_jobs() {
    if (const char* env = std::getenv("LATPOLY_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Reads line-delimited JSON objects, reporting 1-based line numbers on error.
std::vector<Json> read_json_lines(std::istream& in, const std::string& what) {
    std::vector<Json> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(Json::parse(line));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad " +
                                     what + ": " + e.what());
        }
    }
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

// Vertex-count histogram in the shape used by the classification tables:
// dimension 2 lists every count from 3 upward including zero entries,
// dimension 3 lists only the counts that occur.
std::string histogram_line(const std::vector<ClassRecord>& recs, int dim) {
    std::map<int, int> h;
    int max_v = 0;
    for (const auto& r : recs) {
        ++h[r.num_vertices];
        max_v = std::max(max_v, r.num_vertices);
    }
    std::ostringstream os;
    bool first = true;
    if (dim == 2) {
        for (int v = 3; v <= max_v; ++v) {
            if (!first) os << ' ';
            os << v << ':' << (h.count(v) ? h[v] : 0);
            first = false;
        }
    } else {
        for (const auto& [v, n] : h) {
            if (!first) os << ' ';
            os << v << ':' << n;
            first = false;
        }
    }
    return os.str();
}

int cmd_classify(int dim, int max_points, const std::string& seeds_file,
                 const std::string& out_file, int jobs, long long budget,
                 long long tri_budget) {
    std::vector<Fan> seeds;
    if (!seeds_file.empty()) {
        auto in = open_or_throw(seeds_file);
        for (const auto& j : read_json_lines(in, "fan"))
            seeds.push_back(fan_from_json(j));
    } else if (dim == 2) {
        seeds = minimal_smooth_2fans(std::max(0, max_points - 3));
    } else {
        seeds = builtin_seed_fans(3);
    }

    ClassifyResult res = classify(dim, max_points, seeds, budget, jobs);

    std::vector<ClassRecord> records;
    records.reserve(res.classes.size());
    for (const auto& cls : res.classes) {
        bool tri_found = false;
        if (tri_budget > 0)
            tri_found = find_flag_unimodular_regular(cls.rep, tri_budget).has_value();
        records.push_back(make_class_record(cls, tri_found));
    }
    sort_records(records);

    std::ostringstream body;
    if (!res.complete)
        body << "{\"status\":\"incomplete exploration\",\"fans_explored\":"
             << res.stats.fans_explored << "}\n";
    write_records(body, records);

    if (out_file.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_file);
        out << body.str();
    }

    std::ostream& log = out_file.empty() ? std::cerr : std::cout;
    log << "classes: " << records.size() << "\n";
    log << "histogram: " << histogram_line(records, dim) << "\n";
    log << "fans explored: " << res.stats.fans_explored
        << ", rhs tested: " << res.stats.rhs_tested
        << ", polytopes found: " << res.stats.polytopes_found << "\n";
    if (!res.complete) {
        log << "exploration incomplete: fan budget exhausted, output is partial\n";
        return 2;
    }
    return 0;
}

int cmd_verify(const std::string& file) {
    auto in = open_or_throw(file);
    std::vector<LatticePolytope> polys;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            polys.push_back(polytope_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return 1;
        }
    }

    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& p = polys[i];
        std::cout << "polytope " << (i + 1) << ": smooth: " << yesno(is_smooth(p))
                  << ", points: " << p.lattice_points.size()
                  << ", very ample: " << yesno(is_very_ample(p))
                  << ", mult: " << polytope_multiplicity(p).str() << "\n";
    }

    std::vector<int> cls(polys.size(), -1);
    int nclasses = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = nclasses++;
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            if (cls[j] < 0 && are_equivalent(polys[i], polys[j])) cls[j] = cls[i];
    }
    std::cout << nclasses << (nclasses == 1 ? " class" : " classes") << " for "
              << polys.size() << (polys.size() == 1 ? " input" : " inputs") << "\n";
    return 0;
}

int cmd_hilbert(const std::string& file) {
    auto in = open_or_throw(file);
    Json j = Json::parse(in);
    RationalCone c = cone_from_json(j);
    Mat basis = hilbert_basis(c);
    Json out;
    out["hilbert_basis"] = mat_to_json(basis);
    out["count"] = basis.size();
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_canonical(const std::string& file) {
    auto in = open_or_throw(file);
    LatticePolytope p = polytope_from_json(Json::parse(in));
    CanonicalForm form = canonical_form_smooth(p);
    Json out;
    out["dim"] = form.dim;
    out["vertices"] = mat_to_json(form.vertex_list);
    out["frame"] = form.frame_note;
    out["id"] = canonical_id(form);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_triangulate(const std::string& file, long long budget,
                    unsigned long long seed, const std::string& out_file) {
    auto in = open_or_throw(file);
    LatticePolytope p = polytope_from_json(Json::parse(in));
    auto cert = find_flag_unimodular_regular(p, budget, seed);
    if (!cert) {
        std::cerr << "no-certificate-within-budget\n";
        return 2;
    }
    Json j = triangulation_to_json(*cert);
    if (out_file.empty()) {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_file);
        out << j.dump() << "\n";
        std::cout << "certificate written to " << out_file << " (attempt "
                  << cert->attempt << ", " << cert->simplices.size()
                  << " simplices)\n";
    }
    return 0;
}

int cmd_examples(const std::string& name, long long k, const std::string& out_file) {
    LatticePolytope p;
    if (name == "reeve") {
        p = reeve_simplex(Int(k));
    } else if (name == "bruns") {
        p = bruns_polytope(Int(k));
    } else if (name == "fibonacci") {
        p = fibonacci_polygon(static_cast<int>(k));
    } else if (name == "hirzebruch") {
        p = hirzebruch_trapezoid(Int(k)).polytope;
    } else {
        std::cerr << "unknown example: " << name << "\n";
        return 1;
    }

    Json j = polytope_to_json(p);
    if (out_file.empty()) {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_file);
        out << j.dump() << "\n";
    }

    std::cout << "volume: " << normalized_volume(p).str() << "\n";
    std::cout << "points: " << p.lattice_points.size() << "\n";
    std::cout << "smooth: " << yesno(is_smooth(p)) << "\n";
    std::cout << "very ample: " << yesno(is_very_ample(p)) << "\n";
    std::cout << "multiplicity: " << polytope_multiplicity(p).str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice polytope classification toolkit"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "enumerate smooth polytope classes");
    int dim = 2;
    int max_points = 12;
    std::string seeds_file, out_file;
    int jobs = default_jobs();
    long long budget = 0;
    long long tri_budget = 100;
    classify_cmd->add_option("--dim", dim, "ambient dimension (2 or 3)")
        ->check(CLI::Range(2, 3));
    classify_cmd->add_option("--max-points", max_points,
                             "maximum number of lattice points");
    classify_cmd->add_option("--seeds", seeds_file,
                             "file of line-delimited fan objects");
    classify_cmd->add_option("--out", out_file, "output database file");
    classify_cmd->add_option("--jobs", jobs,
                             "worker threads (default LATPOLY_JOBS or 1)");
    classify_cmd->add_option("--budget", budget,
                             "fan exploration budget, 0 for unlimited");
    classify_cmd->add_option("--tri-budget", tri_budget,
                             "triangulation search budget per class, 0 to skip");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "report invariants of stored polytopes");
    std::string verify_file;
    verify_cmd->add_option("file", verify_file, "line-delimited polytope objects")
        ->required();

    // hilbert
    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert basis of a pointed cone");
    std::string hilbert_file;
    hilbert_cmd->add_option("file", hilbert_file, "cone object file")->required();

    // canonical
    auto* canonical_cmd =
        app.add_subcommand("canonical", "canonical form of a smooth polytope");
    std::string canonical_file;
    canonical_cmd->add_option("file", canonical_file, "polytope object file")
        ->required();

    // triangulate
    auto* tri_cmd = app.add_subcommand(
        "triangulate", "search for a flag unimodular regular triangulation");
    std::string tri_file, tri_out;
    long long search_budget = 100000;
    unsigned long long tri_seed = 12345;
    tri_cmd->add_option("file", tri_file, "polytope object file")->required();
    tri_cmd->add_option("--budget", search_budget, "maximum shuffled orders");
    tri_cmd->add_option("--seed", tri_seed, "shuffle seed");
    tri_cmd->add_option("--out", tri_out, "certificate output file");

    // examples
    auto* ex_cmd = app.add_subcommand("examples", "emit a named example polytope");
    std::string ex_name;
    long long ex_k = 1;
    std::string ex_out;
    ex_cmd->add_option("name", ex_name, "reeve | bruns | fibonacci | hirzebruch")
        ->required();
    ex_cmd->add_option("--k", ex_k, "family parameter");
    ex_cmd->add_option("--out", ex_out, "polytope output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(dim, max_points, seeds_file, out_file, jobs,
                                budget, tri_budget);
        if (*verify_cmd) return cmd_verify(verify_file);
        if (*hilbert_cmd) return cmd_hilbert(hilbert_file);
        if (*canonical_cmd) return cmd_canonical(canonical_file);
        if (*tri_cmd)
            return cmd_triangulate(tri_file, search_budget, tri_seed, tri_out);
        if (*ex_cmd) return cmd_examples(ex_name, ex_k, ex_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
