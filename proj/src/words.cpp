#include "fvw/words.hpp"

#include <algorithm>

#include "fvw/errors.hpp"

namespace fvw {

MonoidWord operator*(const MonoidWord& u, const MonoidWord& v) {
    MonoidWord r = u;
    r.idx.insert(r.idx.end(), v.idx.begin(), v.idx.end());
    return r;
}

MonoidWord MonoidWord::reversed() const {
    MonoidWord r = *this;
    std::reverse(r.idx.begin(), r.idx.end());
    return r;
}

MonoidWord MonoidWord::substitute(const std::map<std::uint32_t, MonoidWord>& images) const {
    MonoidWord r;
    for (std::uint32_t i : idx) {
        auto it = images.find(i);
        if (it == images.end()) throw unbound_generator("no image for x" + std::to_string(i));
        r.idx.insert(r.idx.end(), it->second.idx.begin(), it->second.idx.end());
    }
    return r;
}

std::string MonoidWord::str() const {
    if (idx.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += "*";
        out += "x" + std::to_string(idx[i]);
    }
    return out;
}

std::vector<GroupLetter> free_reduce(std::vector<GroupLetter> ls) {
    std::vector<GroupLetter> out;
    out.reserve(ls.size());
    for (const GroupLetter& l : ls) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

GroupWord GroupWord::gen(std::uint32_t i, int sign) {
    GroupWord w;
    w.ls_ = {GroupLetter{i, sign}};
    return w;
}

GroupWord GroupWord::from_letters(std::vector<GroupLetter> ls) {
    GroupWord w;
    w.ls_ = free_reduce(std::move(ls));
    return w;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
    std::vector<GroupLetter> ls = u.ls_;
    ls.insert(ls.end(), v.ls_.begin(), v.ls_.end());
    return GroupWord::from_letters(std::move(ls));
}

GroupWord GroupWord::inverse() const {
    GroupWord r;
    r.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
        r.ls_.push_back(GroupLetter{it->gen, -it->sign});
    return r; // reversal of a reduced word stays reduced
}

GroupWord GroupWord::reversed() const {
    GroupWord r;
    r.ls_.assign(ls_.rbegin(), ls_.rend());
    return r;
}

GroupWord GroupWord::pow(long long n) const {
    GroupWord base = n < 0 ? inverse() : *this;
    long long k = n < 0 ? -n : n;
    GroupWord r;
    for (long long i = 0; i < k; ++i) r = r * base;
    return r;
}

GroupWord GroupWord::substitute(const std::map<std::uint32_t, GroupWord>& images) const {
    std::vector<GroupLetter> out;
    for (const GroupLetter& l : ls_) {
        auto it = images.find(l.gen);
        if (it == images.end()) throw unbound_generator("no image for x" + std::to_string(l.gen));
        const GroupWord img = l.sign > 0 ? it->second : it->second.inverse();
        out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    return GroupWord::from_letters(std::move(out));
}

std::string GroupWord::str() const {
    if (ls_.empty()) return "e";
    std::string out;
    std::size_t i = 0;
    while (i < ls_.size()) {
        std::size_t j = i;
        while (j < ls_.size() && ls_[j] == ls_[i]) ++j;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(ls_[i].gen);
        long long e = static_cast<long long>(j - i) * ls_[i].sign;
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

} // namespace fvw
