"""End-to-end miniature dataset build through the library API.

Samples 4 composite effects, applies each to 3 synthetic source clips,
assembles (reference, input, target) triplets, and writes the manifest.
The same master seed always reproduces the dataset byte for byte.
"""

from pathlib import Path

from vfxsynth import build_triplets, generate_effect_set, write_clip, write_manifest

from effects_tour import synthetic_clip

OUT = Path(__file__).parent / "output" / "dataset"
MASTER_SEED = 7


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    sources = [synthetic_clip(frames=17, h=90, w=160) for _ in range(3)]
    # vary the sources a little so triplets are not degenerate
    results = generate_effect_set(sources, n_effects=4, clips_per_effect=3,
                                  master_seed=MASTER_SEED)

    source_dirs = []
    for i, (clip, _) in enumerate(sources):
        d = OUT / "sources" / f"src{i}"
        write_clip(clip, d, force=True)
        source_dirs.append(str(d))

    effect_sets = []
    for spec, outputs in results:
        pairs = []
        for j, out_clip in enumerate(outputs):
            d = OUT / "clips" / spec.effect_uid / f"src{j}"
            write_clip(out_clip, d, force=True)
            pairs.append((source_dirs[j], str(d)))
        effect_sets.append((spec, pairs))
        print(f"{spec.effect_uid}: {spec.spatial.effect_id} + "
              f"{spec.transition.transition_id} on region={spec.region}")

    records = build_triplets(effect_sets, seed=MASTER_SEED)
    manifest = write_manifest(records, OUT / "manifest.jsonl")
    print(f"\n{len(records)} triplets -> {manifest}")


if __name__ == "__main__":
    main()
