import itertools

import pytest

from conftest import w
from noisydup.channel import (
    ChannelEvent,
    EnumerationLimitError,
    UnclassifiedChange,
    apply_nd,
    apply_td,
    classify_root_change,
    descendants,
    dump_events,
    load_events,
    sample_channel,
)
from noisydup.oracle import ref_cone
from noisydup.words import mu, phi, root


def test_td_example():
    assert apply_td(w("1201210"), 1, 3) == w("1201201210")


def test_td_out_of_range_is_identity():
    assert apply_td(w("1201"), 2, 3) == w("1201")


def test_td_inserts_zero_block_in_derivative():
    for n in range(2, 7):
        for x in itertools.product(range(2), repeat=n):
            head, tail = phi(x, 2, 2)
            for i in range(n - 1):
                y = apply_td(x, i, 2)
                assert phi(y, 2, 2) == (head, tail[:i] + (0, 0) + tail[i:])


def test_nd_example():
    y = apply_nd(w("1201210"), 1, 3, 1, 2, 3)
    assert y == w("1201101210")
    assert phi(y, 3, 3) == (w("120"), w("0200112"))


def test_nd_noise_pairs_at_distance_k():
    q, k = 3, 2
    for n in range(2, 7):
        for x in itertools.product(range(q), repeat=n):
            for i in range(n - k + 1):
                base = phi(apply_td(x, i, k), k, q).tail
                for off in range(1, k + 1):
                    for a in range(1, q):
                        y = apply_nd(x, i, k, off, a, q)
                        tail = phi(y, k, q).tail
                        p = i + off - 1  # changed symbol of the tail
                        expect = list(base)
                        expect[p] = (expect[p] + a) % q
                        if p + k < len(expect):
                            expect[p + k] = (expect[p + k] - a) % q
                        assert tail == tuple(expect)


def test_nd_argument_checks():
    with pytest.raises(ValueError):
        apply_nd(w("1201"), 3, 3, 1, 1, 3)
    with pytest.raises(ValueError):
        apply_nd(w("1201"), 0, 3, 4, 1, 3)
    with pytest.raises(ValueError):
        apply_nd(w("1201"), 0, 3, 1, 0, 3)


def test_descendants_small_cases():
    assert descendants(w("0121"), 2, 3, 0) == {w("0121")}
    assert descendants((0, 1), 2, 2, 1, 0) == {(0, 1), (0, 1, 0, 1)}


def test_descendants_match_second_enumerator():
    for n in range(2, 5):
        for x in itertools.product(range(2), repeat=n):
            for t in range(4):
                assert descendants(x, 2, 2, t, 0) == ref_cone(x, 2, 2, t, 0)
                if t:
                    assert descendants(x, 2, 2, t, 1) == ref_cone(x, 2, 2, t, 1)


def test_descendants_budget():
    with pytest.raises(EnumerationLimitError):
        descendants(w("012012"), 2, 3, 4, 1, budget=50)


def test_sample_channel_is_reproducible():
    x = w("0121021")
    a = sample_channel(x, 2, 3, 4, True, seed=11)
    b = sample_channel(x, 2, 3, 4, True, seed=11)
    assert a == b
    assert sum(e.kind == "noisy" for e in a[1]) == 1
    assert sample_channel(x, 2, 3, 0, False, seed=1) == (x, [])


def test_sample_channel_stays_in_cone():
    x = w("012102")
    for seed in range(30):
        y, _ = sample_channel(x, 2, 3, 2, seed % 2 == 0, seed)
        assert y in descendants(x, 2, 3, 2, 1)
        if seed % 2:
            assert y in descendants(x, 2, 3, 2, 0)


def test_sampled_root_changes_have_allowed_deltas():
    q, k = 3, 2
    x = w("012102")
    mu_x = phi(root(x, k, q), k, q).tail
    for seed in range(10_000):
        y, _ = sample_channel(x, k, q, 3, True, seed)
        assert len(mu(phi(y, k, q).tail, k)) - len(mu_x) in (-k, 0, k, 2 * k)


def test_event_lines_round_trip():
    events = [ChannelEvent("exact", 3), ChannelEvent("noisy", 0, 2, 1)]
    text = dump_events(events)
    assert text == "exact 3\nnoisy 0 2 1\n"
    assert load_events(text) == events
    with pytest.raises(ValueError):
        ChannelEvent.from_line("noisy 1 2")
    with pytest.raises(ValueError):
        ChannelEvent("noisy", 1, 2, 0)


def test_classify_examples():
    m = w("120102002120")
    change = classify_root_change(m, w("020110020102002120"), 3, 3)
    assert change.delta == 6 and change.rows == ("I.+2k",)
    assert classify_root_change(m, m, 3, 3).rows == ("same",)
    assert classify_root_change(m, w("122102120"), 3, 3).delta == -3
    assert classify_root_change(m, w("120102002102021"), 3, 3).delta == 3
    assert classify_root_change(m, w("121101002120"), 3, 3).delta == 0


def test_classify_rejects_impossible_change():
    with pytest.raises(UnclassifiedChange):
        classify_root_change(w("1212"), w("2121"), 2, 3)
    with pytest.raises(UnclassifiedChange):
        classify_root_change(w("1212"), w("12"), 2, 3)
