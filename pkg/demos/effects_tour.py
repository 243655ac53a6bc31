"""Tour of the 20-effect library.

Applies every registered spatial effect, with randomly sampled
parameters, to one synthetic clip and writes a y4m preview per effect
into demos/output/effects/. Open the .y4m files with any raw-video
player (ffplay, mpv, vlc).
"""

from fractions import Fraction
from pathlib import Path

import numpy as np

from vfxsynth import Clip, MaskSequence, SpatialEffectConfig, apply_effect, write_y4m
from vfxsynth.effects import EFFECT_IDS, get_entry, sample_params
from vfxsynth.rng import stream

OUT = Path(__file__).parent / "output" / "effects"


def synthetic_clip(frames=33, h=270, w=480):
    yy, xx = np.mgrid[0:h, 0:w]
    video = np.empty((frames, h, w, 3), dtype=np.uint8)
    masks = np.empty((frames, h, w), dtype=np.uint8)
    for t in range(frames):
        cx = w * (0.2 + 0.6 * t / (frames - 1))
        disk = (xx - cx) ** 2 + (yy - h / 2) ** 2 <= (h / 4) ** 2
        frame = np.stack(
            [xx * 255 // w, yy * 255 // h, np.full((h, w), 40 + 4 * t)], axis=-1
        ).astype(np.uint8)
        frame[disk] = [230, 90, 60]
        video[t] = frame
        masks[t] = np.where(disk, 255, 0)
    return Clip(frames=video, fps=Fraction(15)), MaskSequence(masks)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    clip, mask = synthetic_clip()
    write_y4m(clip, OUT / "_original.y4m")
    for effect_id in EFFECT_IDS:
        params = sample_params(effect_id, stream(42, "tour", effect_id))
        config = SpatialEffectConfig(effect_id, params)
        m = mask if get_entry(effect_id).needs_mask else None
        out = apply_effect(clip, config, mask_seq=m, seed=42)
        write_y4m(out, OUT / f"{effect_id}.y4m")
        print(f"{effect_id:25s} {params}")
    print(f"\npreviews written to {OUT}")


if __name__ == "__main__":
    main()
