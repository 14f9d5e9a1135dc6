#include "newsrec/engine/engine.h"

#include <stdexcept>
#include <string>

namespace newsrec
{

Engine::Engine(AuthorityNetwork network, EngineParams params, bool track_pairs)
    : m_params(params)
    , m_table((params.validate(), params.similarity))
    , m_ledger(network.users(), track_pairs)
    , m_network(std::move(network))
    , m_queues(m_network.users())
{
}

void Engine::submit_news(UserId originator, NewsId news)
{
    submit_news_unrouted(originator, news);
    for (auto follower : m_network.followers(originator)) {
        if (!m_ledger.has_voted(follower, news)) {
            m_queues[follower].add(news, similarity(originator, follower));
        }
    }
}

void Engine::evaluate(UserId user, NewsId news, Vote vote)
{
    evaluate_unrouted(user, news, vote);
    m_queues[user].erase(news);
    if (vote == Vote::Approve) {
        propagate_approval(user, news);
    }
}

void Engine::submit_news_unrouted(UserId originator, NewsId news)
{
    if (!m_submitted.insert(news).second || !m_ledger.evaluations(news).empty()) {
        throw DuplicateNewsError("news " + std::to_string(news) + " already submitted");
    }
    m_ledger.record(originator, news, Vote::Approve);
    emit(SubmitEvent{m_step, originator, news});
}

void Engine::evaluate_unrouted(UserId user, NewsId news, Vote vote)
{
    if (!m_submitted.contains(news)) {
        throw std::invalid_argument("news " + std::to_string(news) + " was never submitted");
    }
    m_ledger.record(user, news, vote);
    emit(VoteEvent{m_step, user, news, vote});
}

void Engine::propagate_approval(UserId approver, NewsId news)
{
    for (auto follower : m_network.followers(approver)) {
        if (!m_ledger.has_voted(follower, news)) {
            m_queues[follower].add(news, similarity(follower, approver));
        }
    }
}

void Engine::decay_all()
{
    emit(DecayEvent{m_step});
    if (m_params.decay.lambda == 0.0) {
        return;
    }
    for (auto& q : m_queues) {
        apply_decay(q, m_params.decay);
    }
}

void Engine::set_authorities(UserId user, std::vector<UserId> authorities)
{
    m_network.set_authorities(user, std::move(authorities));
    emit_authorities(user);
}

void Engine::replace_authority(UserId user, UserId old_authority, UserId new_authority)
{
    m_network.replace(user, old_authority, new_authority);
    emit_authorities(user);
}

double Engine::mean_queue_length() const
{
    if (m_queues.empty()) {
        return 0.0;
    }
    std::size_t total = 0;
    for (const auto& q : m_queues) {
        total += q.size();
    }
    return static_cast<double>(total) / static_cast<double>(m_queues.size());
}

void Engine::attach_log(EventLog* log)
{
    m_log = log;
    for (UserId i = 0; m_log != nullptr && i < m_network.users(); ++i) {
        emit_authorities(i);
    }
}

void Engine::emit_authorities(UserId user)
{
    if (m_log != nullptr) {
        auto a = m_network.authorities(user);
        emit(RewireEvent{m_step, user, {a.begin(), a.end()}});
    }
}

} // namespace newsrec
