import pytest

from eyeguide.errors import BadConfig, NothingToFreeze, SessionNotFound
from eyeguide.pipeline import guidance_document, guide_frame
from eyeguide.service import SessionManager, SessionState
from eyeguide.synth import eye_pair_frame

from conftest import load_frames


def manager():
    return SessionManager()


def test_open_session_defaults_echo():
    m = manager()
    s = m.open_session()
    assert s.config.classifier.a_low == 2.75
    assert s.config.classifier.a_high == 3.00
    assert s.config.classifier.spacing_lo == 0.95
    assert s.config.classifier.spacing_hi == 1.05
    assert s.state == SessionState.LIVE
    assert m.get(s.id) is s


def test_open_session_with_overrides():
    m = manager()
    s = m.open_session({"a_high": 3.1, "style": {"k_normal": 0.4}})
    assert s.config.classifier.a_high == 3.1
    assert s.config.style.k_normal == 0.4
    # the shared defaults stay untouched
    assert m.open_session().config.classifier.a_high == 3.00


def test_open_session_rejects_unknown_keys():
    with pytest.raises(BadConfig):
        manager().open_session({"a_hi": 3.1})
    with pytest.raises(BadConfig):
        manager().open_session({"a_high": "wide"})


def test_unknown_session():
    with pytest.raises(SessionNotFound):
        manager().get("nope")


def test_live_frame_equals_direct_composition():
    m = manager()
    s = m.open_session()
    for frame in load_frames("boundary_cross.json"):
        result = m.submit_frame(s, frame)
        assert result.detection_ok and not result.frozen
        direct = guidance_document(guide_frame(frame, m.defaults))
        msg = result.to_message()
        assert msg["eyes"] == direct["eyes"]
        assert msg["spacing"] == direct["spacing"]
        assert msg["t"] == direct["t"]


def test_same_frame_twice_identical():
    m = manager()
    s = m.open_session()
    frame = load_frames("e30_pair.json")[0]
    a = m.submit_frame(s, frame).to_message()
    b = m.submit_frame(s, frame).to_message()
    assert a == b


def test_detection_failure_yields_no_polygons():
    m = manager()
    s = m.open_session()
    blink = eye_pair_frame(28.0, 0.0, 0.0, gap=30.0)
    result = m.submit_frame(s, blink)
    assert not result.detection_ok
    msg = result.to_message()
    assert msg["error_code"] == "height_zero"
    assert "eyes" not in msg
    assert s.stats.frames_processed == 1


def test_freeze_without_frames_raises():
    m = manager()
    s = m.open_session()
    with pytest.raises(NothingToFreeze):
        m.freeze(s)


def test_freeze_after_failed_detection_still_raises():
    m = manager()
    s = m.open_session()
    m.submit_frame(s, eye_pair_frame(28.0, 0.0, 0.0, gap=30.0))
    with pytest.raises(NothingToFreeze):
        m.freeze(s)


def test_freeze_pins_labels_and_thickness():
    frames = load_frames("boundary_cross.json")
    m = manager()
    s = m.open_session()
    first = m.submit_frame(s, frames[0]).to_message()
    assert first["eyes"]["left"]["labels"]["size"] == "average"
    m.freeze(s)
    assert s.state == SessionState.FROZEN

    frozen_msg = m.submit_frame(s, frames[1]).to_message()
    assert frozen_msg["frozen"] is True
    # labels and styling stay from the frozen frame
    assert frozen_msg["eyes"]["left"]["labels"]["size"] == "average"
    assert frozen_msg["eyes"]["left"]["labels"]["spacing"] == "open"
    assert frozen_msg["eyes"]["left"]["style"] == ["basic", "winged", "lower_inner"]
    # geometry follows the live contour: the ring spans the new wider eye
    xs = [v[0] for v in frozen_msg["eyes"]["left"]["polygons"][0]["vertices"]]
    assert max(xs) - min(xs) >= 32.0

    live = guidance_document(guide_frame(frames[1], m.defaults))
    assert live["eyes"]["left"]["labels"]["size"] == "small"
    assert live["eyes"]["left"]["labels"]["spacing"] == "close"
    assert live["eyes"]["left"]["style"] == ["basic", "winged", "lower_outer"]


def test_frozen_thickness_stays_in_pixels():
    frames = load_frames("boundary_cross.json")
    m = manager()
    s = m.open_session()
    m.submit_frame(s, frames[0])
    m.freeze(s)
    frozen_msg = m.submit_frame(s, frames[2]).to_message()
    # the doubled eye would get h=7.0 live; frozen keeps the captured 3.5
    assert frozen_msg["eyes"]["left"]["thickness"]["h"] == pytest.approx(3.5)
    live = guidance_document(guide_frame(frames[2], m.defaults))
    assert live["eyes"]["left"]["thickness"]["h"] == pytest.approx(7.0)


def test_unfreeze_resumes_live():
    frames = load_frames("boundary_cross.json")
    m = manager()
    s = m.open_session()
    m.submit_frame(s, frames[0])
    m.freeze(s)
    m.unfreeze(s)
    assert s.state == SessionState.LIVE
    msg = m.submit_frame(s, frames[1]).to_message()
    assert msg["frozen"] is False
    assert msg["eyes"]["left"]["labels"]["size"] == "small"


def test_unfreeze_when_live_is_noop():
    m = manager()
    s = m.open_session()
    m.unfreeze(s)
    assert s.state == SessionState.LIVE


def test_stale_frames_are_dropped():
    frames = load_frames("boundary_cross.json")
    m = manager()
    s = m.open_session()
    assert m.submit_frame(s, frames[1]) is not None
    assert m.submit_frame(s, frames[0]) is None  # timestamp went backwards
    stats = m.stats_view(s)
    assert stats["frames_processed"] == 1
    assert stats["frames_dropped"] == 1


def test_stats_view_fields():
    m = manager()
    s = m.open_session()
    m.submit_frame(s, load_frames("e30_pair.json")[0])
    stats = m.stats_view(s)
    assert stats["session_id"] == s.id
    assert stats["state"] == "live"
    assert stats["frames_processed"] == 1
    assert stats["frames_dropped"] == 0
    assert stats["last_latency_ms"] > 0


def test_close_session():
    m = manager()
    s = m.open_session()
    m.close(s.id)
    with pytest.raises(SessionNotFound):
        m.get(s.id)
