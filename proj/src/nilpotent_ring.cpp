#include "dihedra/nilpotent_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace dihedra {

std::size_t NilpotentRing::monomial_count() const {
    std::size_t n = 1;
    for (unsigned q : orders) n *= q;
    return n;
}

std::vector<unsigned> NilpotentRing::exponents(std::size_t idx) const {
    std::vector<unsigned> e(orders.size(), 0);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        e[i] = static_cast<unsigned>(idx % orders[i]);
        idx /= orders[i];
    }
    return e;
}

std::size_t NilpotentRing::index(const std::vector<unsigned>& e) const {
    std::size_t idx = 0;
    for (std::size_t i = orders.size(); i-- > 0;) {
        if (e[i] >= orders[i]) throw std::invalid_argument("monomial exponent out of range");
        idx = idx * orders[i] + e[i];
    }
    return idx;
}

long NilpotentRing::mono_mul(std::size_t a, std::size_t b) const {
    std::vector<unsigned> ea = exponents(a), eb = exponents(b);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        ea[i] += eb[i];
        if (ea[i] >= orders[i]) return -1;
    }
    return static_cast<long>(index(ea));
}

std::size_t NilpotentRing::nilpotency_order() const {
    std::size_t q = 1;
    for (unsigned o : orders) q += o - 1;
    return q;
}

std::string NilpotentRing::monomial_str(std::size_t idx) const {
    if (idx == 0) return "1";
    std::vector<unsigned> e = exponents(idx);
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string NilpotentRing::str() const {
    std::string s = "k[";
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    s += "]/(";
    for (std::size_t i = 0; i < vars.size(); ++i)
        s += (i ? "," : "") + vars[i] + "^" + std::to_string(orders[i]);
    return s + ")";
}

NilpotentRing NilpotentRing::parse(const std::string& text) {
    NilpotentRing r;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto caret = part.find('^');
        std::string name = part.substr(0, caret);
        unsigned order = 2;
        if (caret != std::string::npos) {
            int v = std::stoi(part.substr(caret + 1));
            if (v < 1) throw std::invalid_argument("ring order must be >= 1 in \"" + text + "\"");
            order = static_cast<unsigned>(v);
        }
        if (name.empty()) throw std::invalid_argument("bad ring spec \"" + text + "\"");
        r.vars.push_back(name);
        r.orders.push_back(order);
    }
    if (r.vars.empty()) throw std::invalid_argument("empty ring spec");
    return r;
}

NilpotentRing NilpotentRing::single(unsigned order, const std::string& name) {
    NilpotentRing r;
    r.vars = {name};
    r.orders = {order};
    return r;
}

}  // namespace dihedra
