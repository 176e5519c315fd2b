#include "equideg/degree.hpp"

#include <algorithm>
#include <set>

namespace eqd {

DegreeSetup DegreeSetup::make(GroupPtr gamma, const std::vector<std::string>& irrep_names) {
    DegreeSetup s;
    s.q = direct_product(*gamma, *make_cyclic(2));
    s.table = std::make_shared<CharacterTable>(character_table(*s.q));
    std::vector<std::string> issues;
    std::set<int> used;
    for (const auto& n : irrep_names) {
        int i = find_minus_irrep(*s.table, n);
        if (i < 0) {
            std::string known;
            for (int j : minus_irreps(*s.table)) {
                std::string nm = s.table->irreps[j].name;
                known += (known.empty() ? "" : ", ") + nm.substr(0, nm.size() - 1);
            }
            issues.push_back("unknown irrep selector '" + n + "' for " + gamma->name() + " (known: " + known + ")");
        } else if (!used.insert(i).second) {
            issues.push_back("irrep '" + n + "' assigned twice");
        }
        s.irreps.push_back(i);
    }
    if (!issues.empty()) throw SpecError(issues);
    return s;
}

std::vector<Component> components_for(const DegreeSetup& setup, const std::vector<int>& modes) {
    std::vector<Component> out;
    for (int k : modes)
        for (int ir : setup.irreps) out.push_back({k, ir});
    return out;
}

DegreeEngine::DegreeEngine(DegreeSetup setup, std::vector<int> modes, PosetOptions opt)
    : setup_(std::move(setup)), modes_(std::move(modes)) {
    std::sort(modes_.begin(), modes_.end());
    modes_.erase(std::unique(modes_.begin(), modes_.end()), modes_.end());
    if (modes_.empty() || modes_.front() < 0) throw std::invalid_argument("working set needs at least one mode k >= 0");
    poset_ = std::make_unique<ClassPoset>(setup_.q, components_for(setup_, modes_), opt);
    basis_ = std::make_unique<PosetBasis>(*poset_);
}

int DegreeEngine::component(int k, int l) const {
    auto it = std::find(modes_.begin(), modes_.end(), k);
    if (it == modes_.end() || l < 0 || l >= int(setup_.irreps.size())) return -1;
    return int(it - modes_.begin()) * int(setup_.irreps.size()) + l;
}

int DegreeEngine::fixed_dim(int k, int l, int h) const {
    int c = component(k, l);
    if (c < 0) throw std::out_of_range("component (" + std::to_string(k) + "," + std::to_string(l) + ") not in the poset");
    return poset_->fixed_dim(c, h);
}

BurnsideElement DegreeEngine::basic_degree(int k, int l) const {
    std::vector<long long> d(poset_->size());
    for (int h = 0; h < poset_->size(); ++h) d[h] = fixed_dim(k, l, h) % 2 ? -1 : 1;
    return recurrence(d, *basis_);
}

BurnsideElement DegreeEngine::linearization_product(const SpectralSummary& s) const {
    BurnsideElement r = unit(*basis_);
    for (const auto& [kl, m] : s.mult)
        if (m % 2) r = multiply(r, basic_degree(kl.first, kl.second), *basis_);
    return r;
}

std::vector<long long> DegreeEngine::fixed_point_degrees(const SpectralSummary& s) const {
    std::vector<long long> d(poset_->size());
    for (int h = 0; h < poset_->size(); ++h) {
        long long e = 0;
        for (const auto& [kl, m] : s.mult) e += 1LL * m * fixed_dim(kl.first, kl.second, h);
        d[h] = e % 2 ? -1 : 1;
    }
    return d;
}

BurnsideElement DegreeEngine::linearization_recurrence(const SpectralSummary& s) const {
    return recurrence(fixed_point_degrees(s), *basis_);
}

BurnsideElement DegreeEngine::degree_of_linearization(const SpectralSummary& s) const {
    if (!s.nondegenerate) throw std::logic_error("degree of the linearization requires 0 outside the spectrum");
    BurnsideElement a = linearization_product(s);
    BurnsideElement b = linearization_recurrence(s);
    if (a != b)
        throw ConsistencyError("product route " + format(a, *basis_) + " differs from recurrence route " +
                               format(b, *basis_));
    return a;
}

BurnsideElement DegreeEngine::omega(const SpectralSummary& s) const {
    return unit(*basis_) - degree_of_linearization(s);
}

std::vector<int> DegreeEngine::maximal_orbit_types(int k) const {
    std::vector<int> comps;
    for (int l = 0; l < int(setup_.irreps.size()); ++l) comps.push_back(component(k, l));
    if (comps.empty() || comps[0] < 0) throw std::out_of_range("mode " + std::to_string(k) + " not in the poset");
    return poset_->maximal_orbit_types(comps);
}

int DegreeEngine::frak_n(int h, int k, const SpectralSummary& s) const {
    int n = 0;
    for (int l = 0; l < int(setup_.irreps.size()); ++l) {
        int m = s.multiplicity(k, l);
        if (m && component(k, l) >= 0) n += (fixed_dim(k, l, h) % 2) * m;
    }
    return n;
}

bool DegreeEngine::contains_o2(int h) const {
    const Truncation& t = poset_->base().tr();
    const Subgroup& s = poset_->classes()[h].base;
    for (int x : t.T())
        if (t.q_of(x) == 0 && !s.contains(x)) return false;
    return true;
}

std::optional<int> degenerate_s(const SpectralSummary& s, int s_bound) {
    for (int cand = 1; cand <= s_bound; ++cand) {
        bool ok = true;
        for (int c : s.degenerate)
            if (c > 0 && c % cand == 0 && (c / cand) % 2 == 1) ok = false;
        if (ok) return cand;
    }
    return std::nullopt;
}

std::vector<int> required_modes(const SpectralSummary& s) { return s.active_modes(); }

DegreeReport DegreeEngine::existence_analysis(const SpectralSummary& s, int s_bound) const {
    DegreeReport r;
    r.spectrum = s;
    r.modes = modes_;
    for (int k : modes_)
        for (int l = 0; l < int(setup_.irreps.size()); ++l) r.basic[{k, l}] = basic_degree(k, l);

    std::vector<int> fold_modes;
    if (s.nondegenerate) {
        r.linearization = degree_of_linearization(s);
        r.omega = unit(*basis_) - *r.linearization;
        for (int k : s.active_modes())
            if (k >= 1) fold_modes.push_back(k);
    } else {
        r.degenerate_path = true;
        r.s = degenerate_s(s, s_bound);
        if (!r.s) {
            r.search_exhausted = true;
            r.diagnostics.push_back("no s <= " + std::to_string(s_bound) +
                                    " avoids the degenerate modes along odd multiples");
        } else {
            for (int p = *r.s; p <= s.kstar; p += 2 * *r.s)
                if (std::find(modes_.begin(), modes_.end(), p) != modes_.end()) fold_modes.push_back(p);
        }
    }
    for (int k : fold_modes) {
        auto mx = maximal_orbit_types(k);
        r.maximal[k] = mx;
        for (int h : mx) {
            int n = frak_n(h, k, s);
            r.frak_n[{k, h}] = n;
            if (n % 2 == 0) continue;
            Certificate c;
            c.cls = h;
            c.label = poset_->classes()[h].label;
            c.fold = k;
            c.frak_n = n;
            c.non_constant = !contains_o2(h);
            if (r.omega) {
                c.omega_coeff = r.omega->coeff(h);
                if (c.omega_coeff == 0)
                    r.diagnostics.push_back("odd parity at (" + c.label + ") but omega has zero coefficient there");
            }
            r.certificates.push_back(c);
        }
    }
    for (const auto& d : poset_->diagnostics()) r.diagnostics.push_back(d);
    return r;
}

}  // namespace eqd
