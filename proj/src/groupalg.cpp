#include "superyang/groupalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superyang/tower.hpp"

namespace superyang {

// ============================================================================
// Permutations
// ============================================================================

PermVec perm_identity(int d) {
    PermVec p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

PermVec perm_compose(const PermVec& a, const PermVec& b) {
    if (a.size() != b.size()) throw DomainError("permutation degree mismatch");
    PermVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

PermVec perm_inverse(const PermVec& a) {
    PermVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
    return out;
}

int perm_sign(const PermVec& a) {
    int inv = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

PermVec perm_transposition(int d, int i, int j) {
    if (i < 0 || j < 0 || i >= d || j >= d || i == j)
        throw DomainError("invalid transposition slots");
    PermVec p = perm_identity(d);
    std::swap(p[i], p[j]);
    return p;
}

PermVec perm_parse(const std::string& text) {
    PermVec p;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw DomainError("invalid permutation entry: " + item);
        }
        if (pos != item.size()) throw DomainError("invalid permutation entry: " + item);
        p.push_back(v - 1);
    }
    PermVec sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != perm_identity(static_cast<int>(p.size())) || p.empty())
        throw DomainError("text is not a permutation of 1..d: " + text);
    return p;
}

std::string perm_str(const PermVec& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i] + 1;
    }
    return os.str();
}

// ============================================================================
// Partitions and tableaux
// ============================================================================

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

/// Addable box positions (row, col) of a diagram, top to bottom.
std::vector<std::pair<int, int>> addable_boxes(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t r = 0; r < p.size(); ++r)
        if (r == 0 || p[r - 1] > p[r]) out.emplace_back(static_cast<int>(r), p[r]);
    out.emplace_back(static_cast<int>(p.size()), 0);
    return out;
}

void tableaux_rec(const Partition& shape, int k, int d, std::vector<int>& filled, Tableau& cur,
                  std::vector<Tableau>& out) {
    if (k > d) {
        out.push_back(cur);
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (filled[r] >= shape[r]) continue;
        if (r > 0 && filled[r] >= filled[r - 1]) continue;
        cur[r].push_back(k);
        ++filled[r];
        tableaux_rec(shape, k + 1, d, filled, cur, out);
        --filled[r];
        cur[r].pop_back();
    }
}

void validate_partition(const Partition& p) {
    if (p.empty()) throw DomainError("empty partition");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw DomainError("partition parts must be positive");
        if (i && p[i] > p[i - 1]) throw DomainError("partition parts must decrease");
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 1) throw DomainError("partitions need d >= 1");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(d, d, cur, out);
    return out;
}

Partition conjugate_partition(const Partition& p) {
    validate_partition(p);
    Partition out(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++out[j];
    return out;
}

Int hook_product(const Partition& p) {
    validate_partition(p);
    const Partition conj = conjugate_partition(p);
    Int h(1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            h *= Int(p[i] - j + conj[j] - static_cast<int>(i) - 1);
    return h;
}

Int standard_tableau_count(const Partition& p) {
    Int fact(1);
    int d = 0;
    for (int part : p) d += part;
    for (int k = 2; k <= d; ++k) fact *= k;
    const Int h = hook_product(p);
    if (fact % h != 0) throw VerificationError("hook product does not divide d!");
    return fact / h;
}

bool fits_hook(const Partition& p, int m, int n) {
    validate_partition(p);
    if (static_cast<int>(p.size()) <= m) return true;
    return p[m] <= n;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
    validate_partition(p);
    int d = 0;
    for (int part : p) d += part;
    std::vector<int> filled(p.size(), 0);
    Tableau cur(p.size());
    std::vector<Tableau> out;
    tableaux_rec(p, 1, d, filled, cur, out);
    return out;
}

Tableau first_standard_tableau(const Partition& p) {
    validate_partition(p);
    Tableau t(p.size());
    int k = 1;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (int j = 0; j < p[r]; ++j) t[r].push_back(k++);
    return t;
}

Partition tableau_shape(const Tableau& t) {
    Partition p;
    for (const auto& row : t) p.push_back(static_cast<int>(row.size()));
    validate_partition(p);
    return p;
}

std::vector<int> tableau_contents(const Tableau& t) {
    int d = 0;
    for (const auto& row : t) d += static_cast<int>(row.size());
    std::vector<int> cont(d, 0);
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c)
            cont[t[r][c] - 1] = static_cast<int>(c) - static_cast<int>(r);
    return cont;
}

Tableau tableau_parse(const std::string& text) {
    Tableau t;
    std::istringstream rows(text);
    std::string row_text;
    while (std::getline(rows, row_text, ';')) {
        std::vector<int> row;
        std::istringstream is(row_text);
        std::string item;
        while (std::getline(is, item, ',')) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw DomainError("invalid tableau entry: " + item);
            }
            if (pos != item.size()) throw DomainError("invalid tableau entry: " + item);
            row.push_back(v);
        }
        if (row.empty()) throw DomainError("empty tableau row");
        t.push_back(row);
    }
    // Shape must be a partition and the filling standard with entries 1..d.
    const Partition shape = tableau_shape(t);
    int d = 0;
    for (int part : shape) d += part;
    std::vector<bool> seen(d + 1, false);
    for (const auto& row : t)
        for (int v : row) {
            if (v < 1 || v > d || seen[v]) throw DomainError("tableau entries must be 1..d once");
            seen[v] = true;
        }
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (c + 1 < t[r].size() && t[r][c] >= t[r][c + 1])
                throw DomainError("tableau rows must increase");
            if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] >= t[r + 1][c])
                throw DomainError("tableau columns must increase");
        }
    return t;
}

std::string tableau_str(const Tableau& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (r) os << ';';
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (c) os << ',';
            os << t[r][c];
        }
    }
    return os.str();
}

// ============================================================================
// Idempotents
// ============================================================================

GroupAlg<Rational> jm_element(int d, int a) {
    if (a < 1 || a > d) throw DomainError("Jucys-Murphy index out of range");
    GroupAlg<Rational> x(d);
    for (int b = 1; b < a; ++b) x.add(perm_transposition(d, b - 1, a - 1), Rational(1));
    return x;
}

GroupAlg<Rational> murphy_idempotent(const Tableau& u) {
    const Partition shape = tableau_shape(u);
    int d = 0;
    for (int part : shape) d += part;
    if (d == 1) return GroupAlg<Rational>::one(1);

    // Strip the box containing d.
    int row = -1, col = -1;
    Tableau v = u;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (!v[r].empty() && v[r].back() == d) {
            row = static_cast<int>(r);
            col = static_cast<int>(v[r].size()) - 1;
            v[r].pop_back();
            break;
        }
    if (row < 0) throw DomainError("tableau is not standard: missing maximal entry");
    if (v.back().empty()) v.pop_back();

    GroupAlg<Rational> e = murphy_idempotent(v).lifted(d);
    const Partition mu = tableau_shape(v);
    const GroupAlg<Rational> x = jm_element(d, d);
    const int cont_alpha = col - row;
    for (const auto& [rb, cb] : addable_boxes(mu)) {
        const int cont_b = cb - rb;
        if (cont_b == cont_alpha) continue;
        GroupAlg<Rational> factor = x;
        factor.add(perm_identity(d), Rational(-cont_b));
        e = e * factor.scaled(Rational(1) / Rational(cont_alpha - cont_b));
    }
    return e;
}

GroupAlg<Rational> fusion_idempotent(const Tableau& u, int bound) {
    const Partition shape = tableau_shape(u);
    int d = 0;
    for (int part : shape) d += part;
    if (d > bound) throw ResourceBound("fusion evaluation bounded at " + std::to_string(bound));
    if (d == 1) return GroupAlg<Rational>::one(1);

    // Spectral variable of position a (1-based) lives at tower level d - a + 1,
    // so substituting position 1 first follows the outermost-first discipline.
    // All factors containing u_a form one consecutive block of the ordered
    // product and no later factor mentions u_a again, so each variable is
    // substituted directly after its block: the result is identical and the
    // expensive high-level tower arithmetic only ever touches a few terms.
    const auto uvar = [&](int a) { return FieldElem::variable(d - a + 1); };
    const std::vector<int> cont = tableau_contents(u);

    GroupAlg<FieldElem> phi = GroupAlg<FieldElem>::one(d);
    for (int a = 1; a <= d; ++a) {
        for (int b = a + 1; b <= d; ++b) {
            GroupAlg<FieldElem> factor = GroupAlg<FieldElem>::one(d);
            const FieldElem diff = uvar(a) - uvar(b);
            factor.add(perm_transposition(d, a - 1, b - 1), FieldElem() - diff.inv());
            phi = phi * factor;
        }
        const int level = d - a + 1;
        const FieldElem value{Rational(cont[a - 1])};
        GroupAlg<FieldElem> next(d);
        for (const auto& [p, c] : phi.terms()) next.add(p, c.substitute(level, value));
        phi = next;
    }

    const Rational scale = Rational(1) / Rational(hook_product(shape));
    GroupAlg<Rational> out(d);
    for (const auto& [p, c] : phi.terms()) out.add(p, c.rat() * scale);
    return out;
}

GroupAlg<Rational> symmetrizer(int d) {
    GroupAlg<Rational> e(d);
    Int fact(1);
    for (int k = 2; k <= d; ++k) fact *= k;
    const Rational c = Rational(1) / Rational(fact);
    PermVec p = perm_identity(d);
    do e.add(p, c);
    while (std::next_permutation(p.begin(), p.end()));
    return e;
}

GroupAlg<Rational> antisymmetrizer(int d) {
    GroupAlg<Rational> e(d);
    Int fact(1);
    for (int k = 2; k <= d; ++k) fact *= k;
    const Rational c = Rational(1) / Rational(fact);
    PermVec p = perm_identity(d);
    do e.add(p, perm_sign(p) < 0 ? -c : c);
    while (std::next_permutation(p.begin(), p.end()));
    return e;
}

}  // namespace superyang
