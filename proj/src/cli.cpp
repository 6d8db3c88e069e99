#include "htt/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "htt/enriched.hpp"
#include "htt/fincat.hpp"
#include "htt/formats.hpp"
#include "htt/hall.hpp"
#include "htt/lifting.hpp"
#include "htt/simpset.hpp"
#include "htt/sspace.hpp"
#include "htt/theta.hpp"

namespace htt::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

struct Ctx {
    std::ostream* out;
    bool machine = false;
    int exit_code = kExitOk;

    void kv(const std::string& k, const std::string& v) {
        *out << k << "=" << v << "\n";
    }
    void text(const std::string& s) { *out << s << "\n"; }
};

std::vector<int> parse_dimvec(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) out.push_back(std::stoi(part));
    return out;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

fincat::MorphismClassS class_from_flag(const fincat::FinCategory& C,
                                       const std::string& flag) {
    if (flag == "isos") return fincat::MorphismClassS::isos(C);
    if (flag.empty() || flag == "identities")
        return fincat::MorphismClassS::identities(C);
    std::vector<int> ms;
    for (const auto& n : split_names(flag)) ms.push_back(C.morphism_index(n));
    return fincat::MorphismClassS::of(C, ms);
}

void emit_lift_lines(Ctx& ctx, const lifting::LiftReport& rep) {
    for (const auto& l : rep.lines) {
        if (ctx.machine) {
            std::ostringstream k, v;
            k << "horn." << l.n << "." << l.k;
            v << l.total << "," << l.unfilled << "," << l.multifilled;
            ctx.kv(k.str(), v.str());
        } else {
            std::ostringstream os;
            os << l.n << " " << l.k << " " << l.total << " " << l.unfilled << " "
               << l.multifilled;
            ctx.text(os.str());
        }
    }
}

std::string horn_witness(const simpset::TruncatedSimplicialSet& X,
                         const lifting::LiftReport& rep) {
    if (!rep.kan_witness) return "";
    std::ostringstream os;
    os << "V[" << rep.kan_witness->n << "," << rep.kan_witness->k << "]";
    os << " faces";
    for (int i = 0; i <= rep.kan_witness->n; ++i) {
        if (i == rep.kan_witness->k) continue;
        os << " " << simpset::ref_name(X, rep.kan_witness->faces[i]);
    }
    return os.str();
}

std::string print_theta_morphism(const fincat::ThetaMorphism& f) {
    if (f.level == 0) return "*";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < f.delta.size(); ++i) os << (i ? "," : "") << f.delta[i];
    for (const auto& row : f.blocks) {
        os << ";";
        for (size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << print_theta_morphism(row[j]);
    }
    os << ")";
    return os.str();
}

// the check subcommands accept either a simplicial-set file or a category
// file, taking the nerve in the latter case
simpset::TruncatedSimplicialSet load_sset_or_nerve(const std::string& path,
                                                   int dim) {
    const auto text = formats::read_file(path);
    std::istringstream is(text);
    std::string head;
    while (is >> head) {
        if (head[0] != '#') break;
        std::getline(is, head);
        head.clear();
    }
    if (head == "category")
        return fincat::nerve(formats::parse_category(text), dim);
    return formats::parse_sset(text);
}

std::string rational_str(const hall::Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string profile_str(const hall::GradedVect& x) {
    std::ostringstream os;
    const auto t = x.trimmed();
    if (t.dims.empty()) {
        os << "0";
        return os.str();
    }
    os << t.lo << ":";
    for (size_t i = 0; i < t.dims.size(); ++i) os << (i ? "," : "") << t.dims[i];
    return os.str();
}

hall::GradedVect parse_profile(int q, const std::string& s) {
    // "lo:d0,d1,..." or "0" for the zero object
    hall::GradedVect x;
    x.q = q;
    if (s == "0") return x;
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw InputError("graded profile must look like lo:d0,d1,...");
    x.lo = std::stoi(s.substr(0, colon));
    x.dims = parse_dimvec(s.substr(colon + 1));
    return x;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"finite homotopy-theory toolkit"};
    app.require_subcommand(1);
    Ctx ctx;
    ctx.out = &out;
    std::string format = "text";

    // shared option storage
    std::string in1, in2, in3;
    int dim = 3;
    int up_to = 1;
    int word_cap = 6;
    int q = 2;
    std::string sflag, from, to, window = "0:0", bound_s = "1", left, right,
                         xprof, yprof, zprof;
    int left_class = 0, right_class = 0;
    int cap_n = 2, cap_m = 2;
    bool dual = false, assoc = false;

    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format, "text|machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    auto* nerve = app.add_subcommand("nerve", "nerve of a finite category");
    nerve->add_option("input", in1)->required();
    nerve->add_option("--dim", dim);
    add_format(nerve);

    auto* kan = app.add_subcommand("check-kan", "horn filling, all horns");
    kan->add_option("input", in1)->required();
    kan->add_option("--dim", dim);
    add_format(kan);

    auto* quasi = app.add_subcommand("check-quasicat", "inner horn filling");
    quasi->add_option("input", in1)->required();
    quasi->add_option("--dim", dim);
    add_format(quasi);

    auto* classify = app.add_subcommand(
        "classify-nerve", "nerve-of-category/groupoid classification");
    classify->add_option("input", in1)->required();
    classify->add_option("--dim", dim);
    add_format(classify);

    auto* cdiag = app.add_subcommand("classifying-diagram",
                                     "classifying diagram of a category");
    cdiag->add_option("input", in1)->required();
    cdiag->add_option("--cap-n", cap_n);
    cdiag->add_option("--cap-m", cap_m);
    add_format(cdiag);

    auto* segal = app.add_subcommand("segal-check", "Segal map comparison");
    segal->add_option("input", in1)->required();
    add_format(segal);

    auto* complete = app.add_subcommand("complete-check", "completeness");
    complete->add_option("input", in1)->required();
    add_format(complete);

    auto* dk = app.add_subcommand("dk-check",
                                  "Dwyer-Kan check along a functor of "
                                  "classifying diagrams");
    dk->add_option("source", in1)->required();
    dk->add_option("target", in2)->required();
    dk->add_option("functor", in3)->required();
    dk->add_option("--cap-n", cap_n);
    dk->add_option("--cap-m", cap_m);
    add_format(dk);

    auto* discr = app.add_subcommand("discretize", "discretization pullback");
    discr->add_option("input", in1)->required();
    add_format(discr);

    auto* hom = app.add_subcommand("homology", "integral homology");
    hom->add_option("input", in1)->required();
    hom->add_option("--up-to", up_to);
    add_format(hom);

    auto* cnerve = app.add_subcommand("coherent-nerve",
                                      "coherent nerve of a simplicial category");
    cnerve->add_option("input", in1)->required();
    cnerve->add_option("--dim", dim);
    add_format(cnerve);

    auto* localize = app.add_subcommand("localize",
                                        "bounded Gabriel-Zisman localization");
    localize->add_option("input", in1)->required();
    localize->add_option("--s", sflag, "morphism names, or isos|identities");
    localize->add_option("--from", from)->required();
    localize->add_option("--to", to)->required();
    localize->add_option("--word-cap", word_cap);
    add_format(localize);

    auto* hammock = app.add_subcommand("hammock", "hammock mapping space");
    hammock->add_option("input", in1)->required();
    hammock->add_option("--s", sflag);
    hammock->add_option("--from", from)->required();
    hammock->add_option("--to", to)->required();
    add_format(hammock);

    auto* ore = app.add_subcommand("ore-check", "Ore square completion");
    ore->add_option("input", in1)->required();
    ore->add_option("--s", sflag);
    ore->add_flag("--dual", dual);
    add_format(ore);

    auto* theta = app.add_subcommand("theta-hom", "Theta_n hom enumeration");
    theta->add_option("a", in1)->required();
    theta->add_option("b", in2)->required();
    add_format(theta);

    auto* hprod = app.add_subcommand("hall-product", "classical Hall product");
    hprod->add_option("input", in1)->required();
    hprod->add_option("--q", q);
    hprod->add_option("--left", left)->required();
    hprod->add_option("--right", right)->required();
    hprod->add_option("--left-class", left_class);
    hprod->add_option("--right-class", right_class);
    add_format(hprod);

    auto* hassoc = app.add_subcommand("hall-assoc", "Hall associativity report");
    hassoc->add_option("input", in1)->required();
    hassoc->add_option("--q", q);
    hassoc->add_option("--bound", bound_s)->required();
    add_format(hassoc);

    auto* dhall = app.add_subcommand("derived-hall", "derived Hall numbers");
    dhall->add_option("--q", q);
    dhall->add_option("--window", window, "lo:hi");
    dhall->add_option("--x", xprof);
    dhall->add_option("--y", yprof);
    dhall->add_option("--z", zprof);
    dhall->add_option("--bound", bound_s);
    dhall->add_flag("--assoc", assoc);
    add_format(dhall);

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    ctx.machine = format == "machine";
    try {
        if (*nerve) {
            const auto C = formats::parse_category(formats::read_file(in1));
            out << formats::print_sset(fincat::nerve(C, dim));
        } else if (*kan || *quasi || *classify) {
            const auto X = load_sset_or_nerve(in1, dim);
            const auto rep = lifting::analyze(X, dim);
            if (ctx.machine) {
                ctx.kv("cmd", *kan ? "check-kan" : *quasi ? "check-quasicat"
                                                          : "classify-nerve");
                ctx.kv("dim", std::to_string(dim));
                emit_lift_lines(ctx, rep);
                ctx.kv("kan", rep.kan ? "pass" : "fail");
                ctx.kv("quasicategory", rep.quasicategory ? "pass" : "fail");
                ctx.kv("unique-inner", rep.inner_unique ? "pass" : "fail");
                ctx.kv("nerve-of-category",
                       rep.nerve_of_category() ? "pass" : "fail");
                ctx.kv("nerve-of-groupoid",
                       rep.nerve_of_groupoid() ? "pass" : "fail");
                if (!rep.kan) ctx.kv("kan-witness", horn_witness(X, rep));
                if (*classify) {
                    const auto rec = lifting::reconstruct_category(X, dim);
                    ctx.kv("reconstruction", rec.ok ? "pass" : "fail");
                }
            } else {
                emit_lift_lines(ctx, rep);
                std::ostringstream os;
                if (*kan) {
                    os << "KAN: " << (rep.kan ? "pass" : "fail") << " (d=" << dim
                       << ")";
                    if (!rep.kan) os << " (" << horn_witness(X, rep) << ")";
                } else if (*quasi) {
                    os << "QUASI: " << (rep.quasicategory ? "pass" : "fail")
                       << "; UNIQUE-INNER: " << (rep.inner_unique ? "pass" : "fail")
                       << "; KAN: " << (rep.kan ? "pass" : "fail");
                    if (!rep.kan) os << " (" << horn_witness(X, rep) << ")";
                } else {
                    const auto rec = lifting::reconstruct_category(X, dim);
                    os << "NERVE-OF-CATEGORY: "
                       << (rep.nerve_of_category() ? "pass" : "fail")
                       << "; NERVE-OF-GROUPOID: "
                       << (rep.nerve_of_groupoid() ? "pass" : "fail")
                       << "; RECONSTRUCTION: " << (rec.ok ? "pass" : "fail");
                }
                ctx.text(os.str());
            }
        } else if (*cdiag) {
            const auto C = formats::parse_category(formats::read_file(in1));
            const auto NC = sspace::classifying_diagram(C, cap_n, cap_m);
            out << formats::print_bisimplicial(NC.W);
        } else if (*segal) {
            const auto W = formats::parse_bisimplicial(formats::read_file(in1));
            const auto rep = sspace::segal_check(W);
            for (const auto& l : rep.levels) {
                const char* v = l.verdict == sspace::SegalVerdict::Bijection
                                    ? "bijection"
                                : l.verdict == sspace::SegalVerdict::Battery
                                    ? "battery"
                                    : "fail";
                if (ctx.machine)
                    ctx.kv("segal." + std::to_string(l.k), v);
                else
                    ctx.text("SEGAL k=" + std::to_string(l.k) + ": " + v +
                             (l.witness.empty() ? "" : " (" + l.witness + ")"));
            }
        } else if (*complete) {
            const auto W = formats::parse_bisimplicial(formats::read_file(in1));
            const auto res = sspace::completeness_check(W);
            const char* v = res.verdict == sspace::Completeness::Complete
                                ? "complete"
                            : res.verdict == sspace::Completeness::Incomplete
                                ? "incomplete"
                                : "unknown";
            if (ctx.machine) {
                ctx.kv("completeness", v);
                ctx.kv("witness", res.witness);
            } else {
                ctx.text(std::string("COMPLETENESS: ") + v + " (" + res.witness +
                         ")");
            }
            if (res.verdict == sspace::Completeness::Unknown)
                ctx.exit_code = kExitResource;
        } else if (*dk) {
            const auto C = formats::parse_category(formats::read_file(in1));
            const auto D = formats::parse_category(formats::read_file(in2));
            const auto F = formats::parse_functor(formats::read_file(in3), C, D);
            const auto NC = sspace::classifying_diagram(C, cap_n, cap_m);
            const auto ND = sspace::classifying_diagram(D, cap_n, cap_m);
            const auto f = sspace::classifying_diagram_map(F, NC, ND);
            const auto res = sspace::dk_check(f);
            const char* v = res.verdict == sspace::DkVerdict::Equivalent
                                ? "equivalent"
                            : res.verdict == sspace::DkVerdict::NotEquivalent
                                ? "not-equivalent"
                                : "unknown";
            if (ctx.machine) {
                ctx.kv("dk", v);
                ctx.kv("detail", res.detail);
            } else {
                ctx.text(std::string("DK: ") + v + " (" + res.detail + ")");
            }
            if (res.verdict == sspace::DkVerdict::Unknown)
                ctx.exit_code = kExitResource;
        } else if (*discr) {
            const auto W = formats::parse_bisimplicial(formats::read_file(in1));
            out << formats::print_bisimplicial(sspace::discretize(W));
        } else if (*hom) {
            const auto X = load_sset_or_nerve(in1, up_to + 1);
            const auto h = simpset::homology(X, up_to);
            for (int n = 0; n <= up_to; ++n) {
                std::ostringstream tor;
                for (size_t i = 0; i < h.groups[n].torsion.size(); ++i)
                    tor << (i ? "," : "") << h.groups[n].torsion[i];
                if (ctx.machine) {
                    ctx.kv("betti." + std::to_string(n),
                           std::to_string(h.groups[n].betti));
                    ctx.kv("torsion." + std::to_string(n), tor.str());
                } else {
                    std::ostringstream os;
                    os << "H_" << n << ": Z^" << h.groups[n].betti;
                    if (!h.groups[n].torsion.empty()) os << " + torsion(" << tor.str() << ")";
                    ctx.text(os.str());
                }
            }
            if (ctx.machine)
                ctx.kv("validity-bound", std::to_string(h.validity_bound));
        } else if (*cnerve) {
            const auto C = formats::parse_scat(formats::read_file(in1));
            out << formats::print_sset(enriched::coherent_nerve(C, dim));
        } else if (*localize) {
            const auto C = formats::parse_category(formats::read_file(in1));
            const auto S = class_from_flag(C, sflag);
            const auto r = gz_localize_hom(C, S, C.object_index(from),
                                           C.object_index(to), word_cap);
            if (r.status == fincat::GzHomResult::Status::Unknown) {
                if (ctx.machine) {
                    ctx.kv("localize", "unknown");
                    ctx.kv("note", r.note);
                } else {
                    ctx.text("LOCALIZE: unknown (" + r.note + ")");
                }
                ctx.exit_code = kExitResource;
            } else {
                if (ctx.machine)
                    ctx.kv("classes", std::to_string(r.count()));
                else
                    ctx.text("LOCALIZE: " + std::to_string(r.count()) + " classes");
                for (int c = 0; c < r.count(); ++c) {
                    std::ostringstream os;
                    for (const auto& l : r.class_reps[c])
                        os << (l.backward ? "-" : "+") << C.morphisms[l.morphism].name;
                    if (r.class_reps[c].empty()) os << "=id";
                    if (ctx.machine)
                        ctx.kv("class." + std::to_string(c), os.str());
                    else
                        ctx.text("  " + os.str());
                }
            }
        } else if (*hammock) {
            const auto C = formats::parse_category(formats::read_file(in1));
            const auto S = class_from_flag(C, sflag);
            const auto H = enriched::hammock_mapping_space(
                C, S, C.object_index(from), C.object_index(to));
            if (ctx.machine)
                ctx.kv("pi0", std::to_string(simpset::pi0(H).count));
            else
                ctx.text("HAMMOCK pi0: " + std::to_string(simpset::pi0(H).count));
            out << formats::print_sset(H);
        } else if (*ore) {
            const auto C = formats::parse_category(formats::read_file(in1));
            const auto S = class_from_flag(C, sflag);
            const auto r = fincat::ore_check(C, S, dual);
            if (ctx.machine) {
                ctx.kv("ore", r.holds ? "pass" : "fail");
                if (!r.holds)
                    ctx.kv("witness", C.morphisms[r.s].name + "," +
                                          C.morphisms[r.f].name);
            } else {
                std::ostringstream os;
                os << "ORE: " << (r.holds ? "pass" : "fail");
                if (!r.holds)
                    os << " (span s=" << C.morphisms[r.s].name
                       << ", f=" << C.morphisms[r.f].name << ")";
                ctx.text(os.str());
            }
        } else if (*theta) {
            const auto a = fincat::theta_parse(in1);
            const auto b = fincat::theta_parse(in2);
            const auto hom2 = fincat::theta_hom(a, b);
            if (ctx.machine)
                ctx.kv("count", std::to_string(hom2.size()));
            else
                ctx.text("THETA-HOM: " + std::to_string(hom2.size()) +
                         " morphisms");
            for (size_t i = 0; i < hom2.size(); ++i) {
                if (ctx.machine)
                    ctx.kv("mor." + std::to_string(i), print_theta_morphism(hom2[i]));
                else
                    ctx.text("  " + print_theta_morphism(hom2[i]));
            }
        } else if (*hprod) {
            const auto qf = formats::parse_quiver(formats::read_file(in1));
            const auto& Q = qf.quiver;
            const auto dl = parse_dimvec(left);
            const auto dr = parse_dimvec(right);
            if (static_cast<int>(dl.size()) != Q.vertex_count() ||
                static_cast<int>(dr.size()) != Q.vertex_count())
                throw InputError("dimension vector arity mismatch");
            hall::DimVec bound(Q.vertex_count());
            for (int v = 0; v < Q.vertex_count(); ++v) bound[v] = dl[v] + dr[v];
            const auto table = hall::build_class_table(Q, q, bound);
            const auto& lcs = table.at(dl);
            const auto& rcs = table.at(dr);
            if (left_class < 0 || left_class >= static_cast<int>(lcs.size()) ||
                right_class < 0 || right_class >= static_cast<int>(rcs.size()))
                throw InputError("class index out of range");
            const auto p = hall::hall_product(Q, lcs[left_class].representative,
                                              rcs[right_class].representative,
                                              table);
            std::ostringstream os;
            for (size_t t = 0; t < p.terms.size(); ++t) {
                if (t) os << " + ";
                os << rational_str(p.terms[t].second) << "·[";
                const auto& dv = p.terms[t].first.first;
                for (size_t i = 0; i < dv.size(); ++i) os << (i ? "," : "") << dv[i];
                os << "#" << p.terms[t].first.second << "]";
            }
            if (p.terms.empty()) os << "0";
            if (ctx.machine) {
                ctx.kv("terms", std::to_string(p.terms.size()));
                ctx.kv("product", os.str());
            } else {
                std::ostringstream lhs;
                lhs << "[";
                for (size_t i = 0; i < dl.size(); ++i) lhs << (i ? "," : "") << dl[i];
                lhs << "#" << left_class << "]·[";
                for (size_t i = 0; i < dr.size(); ++i) lhs << (i ? "," : "") << dr[i];
                lhs << "#" << right_class << "] = " << os.str();
                ctx.text(lhs.str());
            }
        } else if (*hassoc) {
            const auto qf = formats::parse_quiver(formats::read_file(in1));
            const auto bound = parse_dimvec(bound_s);
            if (static_cast<int>(bound.size()) != qf.quiver.vertex_count())
                throw InputError("bound arity mismatch");
            const auto table = hall::build_class_table(qf.quiver, q, bound);
            const auto rep = hall::hall_associativity(qf.quiver, table);
            if (ctx.machine) {
                ctx.kv("associativity", rep.ok() ? "pass" : "fail");
                ctx.kv("violations", std::to_string(rep.violations.size()));
            } else {
                ctx.text(std::string("HALL-ASSOC: ") +
                         (rep.ok() ? "pass" : "fail"));
                for (const auto& v : rep.violations) ctx.text("  " + v);
            }
        } else if (*dhall) {
            const auto colon = window.find(':');
            if (colon == std::string::npos)
                throw InputError("--window must look like lo:hi");
            const int lo = std::stoi(window.substr(0, colon));
            const int hi = std::stoi(window.substr(colon + 1));
            if (assoc) {
                const int bound = std::stoi(bound_s);
                const auto rep = hall::derived_associativity(q, lo, hi, bound);
                if (ctx.machine) {
                    ctx.kv("associativity", rep.ok() ? "pass" : "fail");
                    ctx.kv("violations", std::to_string(rep.violations.size()));
                } else {
                    ctx.text(std::string("DERIVED-ASSOC: ") +
                             (rep.ok() ? "pass" : "fail"));
                }
            } else if (!zprof.empty()) {
                const auto x = parse_profile(q, xprof);
                const auto y = parse_profile(q, yprof);
                const auto z = parse_profile(q, zprof);
                const auto g = hall::derived_hall_number(x, y, z);
                if (ctx.machine)
                    ctx.kv("g", rational_str(g));
                else
                    ctx.text("g = " + rational_str(g));
            } else {
                const auto x = parse_profile(q, xprof);
                const auto y = parse_profile(q, yprof);
                const auto terms = hall::derived_hall_product(x, y);
                std::ostringstream os;
                for (size_t t = 0; t < terms.size(); ++t) {
                    if (t) os << " + ";
                    os << rational_str(terms[t].coeff) << "·["
                       << profile_str(terms[t].cls) << "]";
                }
                if (terms.empty()) os << "0";
                if (ctx.machine) {
                    ctx.kv("terms", std::to_string(terms.size()));
                    ctx.kv("product", os.str());
                } else {
                    ctx.text("[" + profile_str(x) + "]·[" + profile_str(y) +
                             "] = " + os.str());
                }
            }
        }
    } catch (const ResourceError& e) {
        err << "resource: " << e.what() << "\n";
        return kExitResource;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return ctx.exit_code;
}

} // namespace htt::cli
