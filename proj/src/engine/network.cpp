#include "newsrec/engine/network.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace newsrec
{

namespace
{

void erase_value(std::vector<UserId>& v, UserId x)
{
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) {
        throw std::logic_error("follower list out of sync");
    }
    v.erase(it);
}

} // namespace

AuthorityNetwork::AuthorityNetwork(std::size_t users, std::size_t per_user)
    : m_per_user(per_user)
    , m_authorities(users * per_user)
    , m_followers(users)
{
    if (users > 0 && per_user > users - 1) {
        throw std::invalid_argument("S = " + std::to_string(per_user) + " exceeds U - 1 = " +
                                    std::to_string(users - 1));
    }
}

AuthorityNetwork AuthorityNetwork::random(std::size_t users, std::size_t per_user, Rng& rng)
{
    AuthorityNetwork net(users, per_user);
    std::vector<UserId> chosen;
    for (UserId i = 0; i < users; ++i) {
        chosen.clear();
        while (chosen.size() < per_user) {
            auto k = static_cast<UserId>(rng.below(users));
            if (k != i && std::find(chosen.begin(), chosen.end(), k) == chosen.end()) {
                chosen.push_back(k);
            }
        }
        std::sort(chosen.begin(), chosen.end());
        std::copy(chosen.begin(), chosen.end(), net.m_authorities.begin() + std::size_t(i) * per_user);
        for (auto k : chosen) {
            net.m_followers[k].push_back(i);
        }
    }
    return net;
}

AuthorityNetwork AuthorityNetwork::from_lists(const std::vector<std::vector<UserId>>& authorities)
{
    const std::size_t per_user = authorities.empty() ? 0 : authorities.front().size();
    AuthorityNetwork net(authorities.size(), per_user);
    for (UserId i = 0; i < authorities.size(); ++i) {
        auto set = authorities[i];
        std::sort(set.begin(), set.end());
        net.validate_set(i, set);
        std::copy(set.begin(), set.end(), net.m_authorities.begin() + std::size_t(i) * per_user);
        for (auto k : set) {
            net.m_followers[k].push_back(i);
        }
    }
    return net;
}

bool AuthorityNetwork::is_authority(UserId user, UserId candidate) const
{
    auto a = authorities(user);
    return std::binary_search(a.begin(), a.end(), candidate);
}

void AuthorityNetwork::validate_set(UserId user, std::span<const UserId> set) const
{
    if (set.size() != m_per_user) {
        throw std::invalid_argument("user " + std::to_string(user) + " needs exactly " +
                                    std::to_string(m_per_user) + " authorities");
    }
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (set[k] >= users()) {
            throw std::invalid_argument("authority id out of range");
        }
        if (set[k] == user) {
            throw std::invalid_argument("user " + std::to_string(user) + " cannot be its own authority");
        }
        if (k > 0 && set[k] == set[k - 1]) {
            throw std::invalid_argument("duplicate authority for user " + std::to_string(user));
        }
    }
}

void AuthorityNetwork::set_authorities(UserId user, std::vector<UserId> authorities)
{
    std::sort(authorities.begin(), authorities.end());
    validate_set(user, authorities);
    auto current = this->authorities(user);
    for (auto old : current) {
        if (!std::binary_search(authorities.begin(), authorities.end(), old)) {
            erase_value(m_followers[old], user);
        }
    }
    for (auto fresh : authorities) {
        if (!std::binary_search(current.begin(), current.end(), fresh)) {
            m_followers[fresh].push_back(user);
        }
    }
    std::copy(authorities.begin(), authorities.end(), m_authorities.begin() + std::size_t(user) * m_per_user);
}

void AuthorityNetwork::replace(UserId user, UserId old_authority, UserId new_authority)
{
    if (new_authority == user || new_authority >= users() || is_authority(user, new_authority)) {
        throw std::invalid_argument("invalid replacement authority");
    }
    auto begin = m_authorities.begin() + std::size_t(user) * m_per_user;
    auto end = begin + m_per_user;
    auto it = std::find(begin, end, old_authority);
    if (it == end) {
        throw std::invalid_argument("not an authority of this user");
    }
    *it = new_authority;
    std::sort(begin, end);
    erase_value(m_followers[old_authority], user);
    m_followers[new_authority].push_back(user);
}

void AuthorityNetwork::check_consistency() const
{
    std::size_t edges = 0;
    for (UserId i = 0; i < users(); ++i) {
        validate_set(i, authorities(i));
        for (auto j : authorities(i)) {
            const auto& f = m_followers[j];
            if (std::count(f.begin(), f.end(), i) != 1) {
                throw std::logic_error("authority " + std::to_string(j) + " of user " + std::to_string(i) +
                                       " does not list it as follower exactly once");
            }
        }
        edges += m_followers[i].size();
    }
    if (edges != users() * m_per_user) {
        throw std::logic_error("follower lists hold edges with no matching authority");
    }
}

} // namespace newsrec
