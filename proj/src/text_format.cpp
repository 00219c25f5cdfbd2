#include "lietab/text_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace lietab {
namespace {

using Grid = std::vector<std::vector<std::string>>;

void render_grid(std::ostream& os, const Grid& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    }
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            line += row[j];
            if (j + 1 < row.size())
                line += std::string(width[j] - row[j].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
}

bool unit_family(const GenValue& fs) {
    return fs.is_integer() && fs.integer_value() == 1;
}

// A guard shared by every class can be hoisted into the block header.
Guard common_guard(const GenericGroup& g) {
    Guard common;
    bool first = true;
    for (const auto& cls : g.classes) {
        if (first) {
            common = cls.guard;
            first = false;
        } else if (!(common.modulus() == cls.guard.modulus() &&
                     common.residues() == cls.guard.residues())) {
            return Guard();
        }
    }
    return common;
}

void render_group(std::ostream& os, const Model& m, const GenericGroup& g) {
    os << "== group " << g.name << (g.complete ? " (complete)" : "") << " ==\n";
    os << "order: " << g.order.to_string() << '\n';
    const Guard shared = common_guard(g);
    if (!shared.is_trivial()) os << "valid for " << shared.to_string() << '\n';
    os << '\n';

    bool any_family = false;
    bool mixed_guard = false;
    bool any_label = false;
    for (const auto& cls : g.classes) {
        if (!unit_family(cls.family_size)) any_family = true;
        if (shared.is_trivial() && !cls.guard.is_trivial()) mixed_guard = true;
        if (cls.semisimple_label) any_label = true;
    }

    Grid classes;
    std::vector<std::string> head = {"class", "centralizer", "inverse", "type"};
    if (any_family) head.push_back("family");
    if (mixed_guard) head.push_back("guard");
    if (any_label) head.push_back("label");
    classes.push_back(head);
    for (const auto& cls : g.classes) {
        std::vector<std::string> row = {cls.name,
                                        cls.centralizer_order.to_string(),
                                        cls.inverse_class,
                                        cls.is_unipotent ? "unipotent" : "-"};
        if (any_family)
            row.push_back(unit_family(cls.family_size)
                              ? "-"
                              : cls.family_size.to_string());
        if (mixed_guard)
            row.push_back(cls.guard.is_trivial() ? "-" : cls.guard.to_string());
        if (any_label) row.push_back(cls.semisimple_label.value_or("-"));
        classes.push_back(row);
    }
    render_grid(os, classes);

    std::vector<const ClassFunction*> fns;
    for (const auto& name : m.function_order)
        if (m.functions.at(name).group()->name == g.name)
            fns.push_back(&m.functions.at(name));
    if (fns.empty()) return;

    os << "\nclass functions\n";
    Grid values;
    std::vector<std::string> vh = {""};
    for (const auto& cls : g.classes) vh.push_back(cls.name);
    values.push_back(vh);
    for (const ClassFunction* f : fns) {
        std::vector<std::string> row = {f->name()};
        for (const auto& cls : g.classes)
            row.push_back(f->defined_at(cls.name) ? f->at(cls.name).to_string()
                                                  : ".");
        values.push_back(row);
    }
    render_grid(os, values);
}

void render_registry(std::ostream& os, const DLRegistry& reg) {
    os << "== registry on " << reg.group->name << " ==\n";
    Grid grid;
    grid.push_back({"entry", "torus order", "orbit", "multiplicities"});
    for (const auto& e : reg.entries) {
        std::string mults;
        for (const auto& [chr, mlt] : e.multiplicities) {
            if (mlt == 0) continue;
            if (!mults.empty()) mults += ' ';
            mults += chr + ":" + std::to_string(mlt);
        }
        if (mults.empty()) mults = "-";
        grid.push_back({e.label, e.torus_order.to_string(),
                        e.orbit_size.to_string(), mults});
    }
    render_grid(os, grid);
    std::string pairing;
    for (std::size_t i = 0; i < reg.inverse_pairing.size(); ++i) {
        const std::size_t j = reg.inverse_pairing[i];
        if (j < i) continue;
        if (!pairing.empty()) pairing += ' ';
        pairing += reg.entries[i].label + "~" + reg.entries[j].label;
    }
    if (!pairing.empty()) os << "inverse pairing: " << pairing << '\n';
}

void render_green(std::ostream& os, const std::string& name,
                  const GreenTable& t) {
    os << "== green table " << name << " (G=" << t.G_label
       << ", L=" << t.L_label;
    if (!t.P_label.empty()) os << ", P=" << t.P_label;
    os << ") ==\n";
    Grid grid;
    std::vector<std::string> head = {""};
    head.insert(head.end(), t.v_classes.begin(), t.v_classes.end());
    grid.push_back(head);
    for (std::size_t k = 0; k < t.u_classes.size(); ++k) {
        std::vector<std::string> row = {t.u_classes[k]};
        for (std::size_t j = 0; j < t.v_classes.size(); ++j)
            row.push_back(t.Q.at(k, j).to_string());
        grid.push_back(row);
    }
    std::vector<std::string> wrow = {"weight"};
    for (const auto& w : t.weights) wrow.push_back(w.to_string());
    grid.push_back(wrow);
    render_grid(os, grid);
}

void render_mult(std::ostream& os, const std::string& name,
                 const MultiplicityMatrix& mm) {
    os << "== multiplicities " << name;
    if (!mm.L_label.empty()) os << " (L=" << mm.L_label << ")";
    os << " ==\n";
    Grid grid;
    std::vector<std::string> head = {""};
    head.insert(head.end(), mm.cols.begin(), mm.cols.end());
    grid.push_back(head);
    for (std::size_t i = 0; i < mm.rows.size(); ++i) {
        std::vector<std::string> row = {mm.rows[i]};
        for (std::size_t j = 0; j < mm.cols.size(); ++j)
            row.push_back(std::to_string(mm.entries[i][j]));
        grid.push_back(row);
    }
    render_grid(os, grid);
}

void render_split(std::ostream& os, const std::string& group,
                  const SplitClassDatum& d) {
    os << "== split " << d.parent << " (" << group << ") ==\n";
    os << "children:";
    for (const auto& c : d.children) os << ' ' << c;
    os << '\n';
    Grid grid;
    std::vector<std::string> head = {""};
    head.insert(head.end(), d.chi_names.begin(), d.chi_names.end());
    grid.push_back(head);
    for (std::size_t i = 0; i < d.children.size(); ++i) {
        std::vector<std::string> row = {"coeff " + d.children[i]};
        for (std::size_t j = 0; j < d.chi_names.size(); ++j)
            row.push_back(d.coefficient_matrix.at(i, j).to_string());
        grid.push_back(row);
    }
    for (std::size_t i = 0; i < d.children.size(); ++i) {
        std::vector<std::string> row = {"value " + d.children[i]};
        for (std::size_t j = 0; j < d.chi_names.size(); ++j)
            row.push_back(d.value_matrix.at(i, j).to_string());
        grid.push_back(row);
    }
    render_grid(os, grid);
}

void render_numeric(std::ostream& os, const NumericTable& t, const Model& m) {
    os << "== numeric table " << t.group << " at q=" << t.q << " ==\n";
    std::vector<std::string> cols;
    if (m.groups.count(t.group) && !t.values.empty()) {
        for (const auto& cls : m.group(t.group)->classes)
            if (t.values.begin()->second.count(cls.name))
                cols.push_back(cls.name);
    } else if (!t.values.empty()) {
        for (const auto& [cname, v] : t.values.begin()->second)
            cols.push_back(cname);
    }
    Grid grid;
    std::vector<std::string> head = {""};
    head.insert(head.end(), cols.begin(), cols.end());
    grid.push_back(head);
    for (const auto& [fname, row] : t.values) {
        std::vector<std::string> out = {fname};
        for (const auto& c : cols) {
            auto it = row.find(c);
            out.push_back(it == row.end() ? "." : it->second.to_string());
        }
        grid.push_back(out);
    }
    render_grid(os, grid);
}

}  // namespace

std::string render_text(const Model& m) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << '\n';
        first = false;
    };
    for (const auto& name : m.group_order) {
        sep();
        render_group(os, m, *m.groups.at(name));
    }
    for (const auto& name : m.registry_order) {
        sep();
        render_registry(os, m.registries.at(name));
    }
    for (const auto& name : m.green_order) {
        sep();
        render_green(os, name, m.greens.at(name));
    }
    for (const auto& name : m.mult_order) {
        sep();
        render_mult(os, name, m.mults.at(name));
    }
    for (const auto& [group, datum] : m.split_data) {
        sep();
        render_split(os, group, datum);
    }
    for (const auto& t : m.numeric_tables) {
        sep();
        render_numeric(os, t, m);
    }
    return os.str();
}

}  // namespace lietab
