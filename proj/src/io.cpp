#include "sylow/io.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sylow {

std::string address_to_string(const Address& a) {
    std::ostringstream os;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    return os.str();
}

Address address_from_string(const std::string& s) {
    Address out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) out.push_back(std::stoi(part));
    return out;
}

json tree_to_json(const TreeFn& t) {
    json labels = json::object();
    for (const auto& addr : skeleton_addresses(t.p, t.k)) labels[address_to_string(addr)] = label_at(t, addr);
    return json{{"p", t.p}, {"k", t.k}, {"labels", labels}};
}

TreeFn tree_from_json(const json& j) {
    const int p = j.at("p").get<int>();
    const int k = j.at("k").get<int>();
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k == 0) return make_trivial(p);
    const auto& labels = j.at("labels");
    std::function<TreeFn(Address&, int)> build = [&](Address& at, int height) -> TreeFn {
        const auto key = address_to_string(at);
        if (!labels.contains(key)) throw std::invalid_argument("missing label for address '" + key + "'");
        const int label = labels.at(key).get<int>();
        if (height == 1) return make_leaf(p, label);
        std::vector<TreeFn> ch;
        ch.reserve(static_cast<size_t>(p));
        for (int sym = 1; sym <= p; ++sym) {
            at.push_back(sym);
            ch.push_back(build(at, height - 1));
            at.pop_back();
        }
        return assemble(std::move(ch), label);
    };
    Address root;
    return build(root, k);
}

json ntree_to_json(const NTreeFn& t) {
    json comps = json::array();
    for (const auto& c : t.comps) comps.push_back(tree_to_json(c));
    return json{{"p", t.shape.p}, {"n", t.shape.n}, {"components", comps}};
}

NTreeFn ntree_from_json(const json& j) {
    const int p = j.at("p").get<int>();
    const long long n = j.at("n").get<long long>();
    const auto shape = p_adic_shape(n, p);
    std::vector<TreeFn> comps;
    for (const auto& cj : j.at("components")) comps.push_back(tree_from_json(cj));
    return make_ntree(shape, std::move(comps));
}

NTreeFn any_tree_from_json(const json& j) {
    if (j.contains("components")) return ntree_from_json(j);
    const TreeFn t = tree_from_json(j);
    if (t.k == 0) throw std::invalid_argument("a bare trivial tree needs an n-level wrapper");
    return make_ntree(p_adic_shape(ipow(t.p, t.k), t.p), {t});
}

json cyclotomic_to_json(const Cyclotomic& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
    return json{{"p", v.p()}, {"coeffs", coeffs}};
}

json generators_to_json(const GeneratorSet& gs) {
    json g = json::object(), sigma = json::object(), tau = json::object();
    for (const auto& e : gs.entries) {
        const std::string key =
            std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.ell);
        g[key] = e.g.to_cycle_string();
        if (e.sigma.degree() > 0) sigma[key] = e.sigma.to_cycle_string();
    }
    for (int i = 1; i <= gs.shape.term_count(); ++i)
        for (int j = 1; j <= gs.shape.terms[static_cast<size_t>(i) - 1].a; ++j)
            tau[std::to_string(i) + "," + std::to_string(j)] = tau_embed(gs.shape, i, j).to_cycle_string();
    json xi = json::array(), zeta = json::array();
    for (const auto& x : gs.xi) xi.push_back(x.to_cycle_string());
    for (const auto& z : gs.zeta) zeta.push_back(z.to_cycle_string());
    json out{{"p", gs.p}, {"n", gs.n}, {"g", g}, {"sigma", sigma}, {"tau", tau}, {"xi", xi}, {"zeta", zeta}};
    if (gs.a != 0) {
        out["a"] = gs.a;
        out["b"] = gs.b;
    }
    return out;
}

json counterexample_to_json(const CounterexampleReport& rep) {
    return json{{"t1_admissible", rep.t1_admissible},
                {"t2_admissible", rep.t2_admissible},
                {"degree1", rep.degree1.str()},
                {"degree2", rep.degree2.str()},
                {"galois_sends_t1_to_t2", rep.galois_sends_t1_to_t2},
                {"sigma_orbit_size", rep.sigma_orbit_size},
                {"t2_in_sigma_orbit", rep.t2_in_sigma_orbit},
                {"pass", rep.pass()}};
}

namespace {

void dot_nodes(std::ostream& os, const TreeFn& t, const std::string& prefix) {
    for (const auto& addr : skeleton_addresses(t.p, t.k)) {
        const std::string name = prefix + address_to_string(addr);
        os << "  \"" << name << "\" [xlabel=\"" << label_at(t, addr) << "\"];\n";
        if (!addr.empty()) {
            Address parent(addr.begin(), addr.end() - 1);
            os << "  \"" << prefix + address_to_string(parent) << "\" -- \"" << name << "\";\n";
        }
    }
}

}  // namespace

std::string tree_to_dot(const TreeFn& t) {
    std::ostringstream os;
    os << "graph tree {\n  node [shape=point];\n  forcelabels=true;\n";
    dot_nodes(os, t, "");
    os << "}\n";
    return os.str();
}

std::string ntree_to_dot(const NTreeFn& t) {
    std::ostringstream os;
    os << "graph forest {\n  node [shape=point];\n  forcelabels=true;\n";
    for (size_t j = 0; j < t.comps.size(); ++j) {
        if (t.comps[j].k == 0) continue;
        dot_nodes(os, t.comps[j], std::to_string(j + 1) + "/");
    }
    os << "}\n";
    return os.str();
}

ActionGen parse_action_gen(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("generator spec needs a ':'");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "sigma") {
        const auto parts = address_from_string(rest);
        if (parts.size() != 3) throw std::invalid_argument("sigma spec is sigma:i,j,l");
        return sigma_gen(parts[0], parts[1], parts[2]);
    }
    if (kind == "galois") return galois_gen(std::stoi(rest));
    if (kind == "rho") {
        const auto colon2 = rest.find(':');
        if (colon2 == std::string::npos) throw std::invalid_argument("rho spec is rho:y:letters");
        const int y = std::stoi(rest.substr(0, colon2));
        std::vector<ActionGen::RhoLetter> word;
        std::istringstream is(rest.substr(colon2 + 1));
        std::string letter;
        while (std::getline(is, letter, ',')) {
            if (letter == "xi")
                word.push_back(ActionGen::RhoLetter::Xi);
            else if (letter == "zeta")
                word.push_back(ActionGen::RhoLetter::Zeta);
            else
                throw std::invalid_argument("rho letters are 'xi' and 'zeta'");
        }
        return rho_gen(y, std::move(word));
    }
    throw std::invalid_argument("unknown generator kind '" + kind + "'");
}

}  // namespace sylow
