#include "qvertex/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qvertex {

json to_json(const LaurentPoly &p)
{
    json out = json::array();
    for (const auto &[e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
    return out;
}

LaurentPoly laurent_from_json(const json &j)
{
    std::map<int, mpz_class> terms;
    for (const auto &t : j) {
        mpz_class c;
        if (c.set_str(t.at(1).get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer in polynomial");
        terms[t.at(0).get<int>()] += c;
    }
    return LaurentPoly::from_terms(terms);
}

json to_json(const RationalFunctionQ &r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RationalFunctionQ rational_from_json(const json &j)
{
    return RationalFunctionQ(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const Partition &p) { return p.parts(); }

Partition partition_from_json(const json &j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const SymFunc &f)
{
    json terms = json::array();
    for (const auto &[la, c] : f.terms()) terms.push_back({{"partition", to_json(la)}, {"coeff", to_json(c)}});
    return {{"basis", "powersum"}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json &j)
{
    if (j.at("basis") != "powersum") throw std::invalid_argument("only the power-sum basis is supported");
    SymFunc f;
    for (const auto &t : j.at("terms")) f.add_term(partition_from_json(t.at("partition")), rational_from_json(t.at("coeff")));
    return f;
}

json to_json(const FockState &s)
{
    return {{"sym", to_json(s.sym())}, {"lattice_k", s.lattice_k()}, {"sigma_twice", s.sigma_twice()}};
}

json to_json(const DualFockState &s)
{
    return {{"sym", to_json(s.sym())}, {"lattice_k", s.lattice_k()}, {"sigma_twice", s.sigma_twice()}};
}

FockState fock_state_from_json(const json &j)
{
    return FockState(symfunc_from_json(j.at("sym")), j.at("lattice_k").get<int>(), j.at("sigma_twice").get<int>());
}

json to_json(const PowerSeriesX &s)
{
    json c = json::array();
    for (int n = 0; n <= s.order(); ++n) c.push_back(to_json(s[n]));
    return {{"order", s.order()}, {"coeffs", c}};
}

std::string rational_string(const mpq_class &x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpq_class parse_rational(const std::string &s)
{
    mpq_class x;
    if (s.empty() || x.set_str(s, 10) != 0 || x.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + s + "'");
    x.canonicalize();
    return x;
}

json evaluated_json(const SymFunc &f, const mpq_class &q)
{
    json terms = json::array();
    for (const auto &[la, c] : f.terms()) {
        auto v = c.evaluate(q);
        if (!v) throw std::domain_error("q = " + rational_string(q) + " is a pole of " + c.to_string());
        terms.push_back({{"partition", to_json(la)}, {"value", rational_string(*v)}});
    }
    return {{"basis", "powersum"}, {"q", rational_string(q)}, {"terms", terms}};
}

std::string to_csv(const SymFunc &f)
{
    std::ostringstream os;
    os << "partition,coefficient-numerator,coefficient-denominator\n";
    for (const auto &[la, c] : f.terms()) {
        std::string parts;
        for (int p : la.parts()) parts += (parts.empty() ? "" : " ") + std::to_string(p);
        os << '"' << parts << "\",\"" << c.num().to_string() << "\",\"" << c.den().to_string() << "\"\n";
    }
    return os.str();
}

}  // namespace qvertex
