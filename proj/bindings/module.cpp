#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qatlas/cli.hpp"
#include "qatlas/cohomology.hpp"
#include "qatlas/f2core.hpp"
#include "qatlas/octonions.hpp"
#include "qatlas/sp6.hpp"
#include "qatlas/structures.hpp"
#include "qatlas/study.hpp"

namespace py = pybind11;

namespace {

using namespace qatlas;

std::vector<unsigned> theta_codes(const std::vector<f2core::Theta>& thetas) {
    std::vector<unsigned> out;
    out.reserve(thetas.size());
    for (auto t : thetas) out.push_back(t.code());
    return out;
}

sp6::ActionKind parse_kind(const std::string& name) {
    static const std::map<std::string, sp6::ActionKind> kinds = {
        {"vector", sp6::ActionKind::vector},
        {"odd_theta", sp6::ActionKind::odd_theta},
        {"even_theta", sp6::ActionKind::even_theta},
        {"steiner", sp6::ActionKind::steiner},
        {"gopel", sp6::ActionKind::gopel},
        {"isotropic_plane", sp6::ActionKind::isotropic_plane},
        {"nonisotropic_plane", sp6::ActionKind::nonisotropic_plane},
        {"tetrad", sp6::ActionKind::tetrad},
        {"heptad", sp6::ActionKind::heptad},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw std::domain_error("unknown action kind: " + name);
    return it->second;
}

cohomology::StructureTag parse_structure_or_throw(const std::string& name) {
    auto tag = cohomology::parse_structure(name);
    if (!tag) throw std::domain_error("unknown structure: " + name);
    return *tag;
}

}  // namespace

PYBIND11_MODULE(_qatlas, m) {
    m.doc() = "Exact enumeration of the classical structures attached to plane quartics";

    // f2core
    m.def("pairing", [](unsigned u, unsigned v) {
        return f2core::pairing(f2core::Vec(u), f2core::Vec(v));
    }, py::arg("u"), py::arg("v"), "Symplectic pairing of two vector codes");
    m.def("q0", [](unsigned v) { return f2core::q0(f2core::Vec(v)); }, py::arg("v"));
    m.def("arf", [](unsigned shift) { return f2core::arf(f2core::Theta(f2core::Vec(shift))); },
          py::arg("shift"), "Arf invariant of the theta with the given shift");
    m.def("theta_eval", [](unsigned shift, unsigned v) {
        return f2core::theta_eval(f2core::Theta(f2core::Vec(shift)), f2core::Vec(v));
    }, py::arg("shift"), py::arg("v"));
    m.def("subspaces", [](int k, bool isotropic_only) {
        std::vector<std::vector<unsigned>> out;
        for (const auto& s : f2core::subspaces(k, isotropic_only)) {
            std::vector<unsigned> basis;
            for (auto b : s.basis()) basis.push_back(b.code());
            out.push_back(basis);
        }
        return out;
    }, py::arg("k"), py::arg("isotropic_only") = false,
       "Echelon bases of all k-dimensional subspaces");

    // structures
    m.def("odd_thetas", [] { return theta_codes(structures::odd_thetas()); });
    m.def("even_thetas", [] { return theta_codes(structures::even_thetas()); });
    m.def("steiner_complex", [](unsigned v) {
        const auto sc = structures::steiner_complex(f2core::Vec(v));
        py::dict out;
        out["key"] = sc.key.code();
        std::vector<unsigned> members;
        for (auto t : sc.members) members.push_back(t.code());
        out["members"] = members;
        std::vector<std::pair<unsigned, unsigned>> pairs;
        for (const auto& [a, b] : sc.pairs) pairs.emplace_back(a.code(), b.code());
        out["pairs"] = pairs;
        return out;
    }, py::arg("v"));
    m.def("syzygetic_tetrads", [] {
        std::vector<std::array<unsigned, 4>> out;
        for (const auto& t : structures::syzygetic_tetrads()) {
            std::array<unsigned, 4> codes;
            for (int i = 0; i < 4; ++i) codes[i] = t.members[i].code();
            out.push_back(codes);
        }
        return out;
    });
    m.def("gopel_subsets", [] {
        std::vector<std::array<unsigned, 7>> out;
        for (const auto& g : structures::gopel_subsets()) {
            std::array<unsigned, 7> codes;
            for (int i = 0; i < 7; ++i) codes[i] = g.points[i].code();
            out.push_back(codes);
        }
        return out;
    });
    m.def("azygetic_triads", [] {
        std::vector<std::array<unsigned, 3>> out;
        for (const auto& t : structures::azygetic_triads()) {
            std::array<unsigned, 3> codes;
            for (int i = 0; i < 3; ++i) codes[i] = t.keys[i].code();
            out.push_back(codes);
        }
        return out;
    });
    m.def("aronhold_heptads", [] {
        std::vector<std::array<unsigned, 7>> out;
        for (const auto& h : structures::aronhold_heptads()) {
            std::array<unsigned, 7> codes;
            for (int i = 0; i < 7; ++i) codes[i] = h.members[i].code();
            out.push_back(codes);
        }
        return out;
    });
    m.def("heptad_even_theta", [](const std::array<unsigned, 7>& codes) {
        structures::AronholdHeptad h;
        for (int i = 0; i < 7; ++i) h.members[i] = f2core::Theta(f2core::Vec(codes[i]));
        return structures::heptad_even_theta(h).code();
    }, py::arg("heptad"));
    m.def("octad_labeling", [](const std::array<unsigned, 7>& codes) {
        structures::AronholdHeptad h;
        for (int i = 0; i < 7; ++i) h.members[i] = f2core::Theta(f2core::Vec(codes[i]));
        const auto lab = structures::octad_labeling(h);
        py::dict out;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                out[py::make_tuple(i, j)] = lab.at(i, j).code();
        return out;
    }, py::arg("heptad"), "Duad {i,j} -> odd theta code, heptad in canonical order");

    // sp6
    m.def("sp6_order", [](std::uint64_t budget) {
        return sp6::group_closure(budget).order();
    }, py::arg("budget") = 2'000'000);
    m.def("orbit_and_stabilizer", [](const std::string& kind, std::uint64_t group_order) {
        const auto report = sp6::orbit_and_stabilizer_order(parse_kind(kind), group_order);
        py::dict out;
        out["kind"] = kind;
        out["orbit_size"] = report.orbit_size;
        out["stabilizer_order"] = report.stabilizer_order;
        out["transitive"] = report.transitive;
        return out;
    }, py::arg("kind"), py::arg("group_order") = 1'451'520);
    m.def("pair_rank", [](const std::string& kind) { return sp6::pair_rank(parse_kind(kind)); },
          py::arg("kind"));

    // study
    m.def("quadric_value", [](unsigned p) {
        return study::quadric_value(study::StudyPoint(p));
    }, py::arg("p"));
    m.def("quadric_point_count", [] { return study::quadric_points().size(); });
    m.def("line_classification", [](unsigned p) {
        const auto c = study::classify_lines_through(study::StudyPoint(p));
        return py::make_tuple(c.n0, c.n1, c.n2);
    }, py::arg("p"));
    m.def("enneads", [] {
        std::vector<std::array<unsigned, 9>> out;
        for (const auto& e : study::enneads()) {
            std::array<unsigned, 9> codes;
            for (int i = 0; i < 9; ++i) codes[i] = e.points[i].code();
            out.push_back(codes);
        }
        return out;
    });
    m.def("s9_linear_group_order", [] { return study::s9_linear_group().order(); });
    m.def("pgammal_2_8_order", [] { return study::pgammal_2_8().order(); });

    // octonions
    m.def("octonion_multiply", [](unsigned x, unsigned y) {
        const auto p = octonions::multiply(x, y);
        return py::make_tuple(p.sign, p.label);
    }, py::arg("x"), py::arg("y"), "(sign, label) of e_x e_y");
    m.def("octonion_table", [] {
        std::vector<std::vector<std::pair<int, unsigned>>> out(8);
        const auto& t = octonions::full_table();
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y) out[x].emplace_back(t[x][y].sign, t[x][y].label);
        return out;
    });
    m.def("octonion_table_matches_reference", [] { return octonions::validate_table().ok; });

    // cohomology
    m.def("poincare", [](const std::string& structure) {
        return cohomology::poincare(cohomology::builtin_tables(),
                                    parse_structure_or_throw(structure))
            .coefficients;
    }, py::arg("structure"), "Ascending t-coefficients");
    m.def("point_count", [](const std::string& structure) {
        return cohomology::point_count(cohomology::builtin_tables(),
                                       parse_structure_or_throw(structure))
            .coefficients;
    }, py::arg("structure"), "Ascending q-coefficients");
    m.def("audit_summary", [] {
        const auto report = cohomology::audit(cohomology::builtin_tables());
        py::list items;
        int findings = 0, known = 0;
        for (const auto& item : report.items) {
            py::dict d;
            d["id"] = item.id;
            d["finding"] = item.finding;
            d["known"] = item.known;
            d["detail"] = item.detail;
            items.append(d);
            findings += item.finding;
            known += item.finding && item.known;
        }
        py::dict out;
        out["items"] = items;
        out["findings"] = findings;
        out["known_findings"] = known;
        return out;
    });

    // CLI passthrough
    m.def("run_cli", [](const std::vector<std::string>& args) {
        const auto result = cli::run(args);
        return py::make_tuple(result.exit_code, result.out, result.err);
    }, py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr)");
}
