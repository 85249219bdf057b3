"""Hand-enumerated mutation suite for the command grammar.

Each case is (name, line, strict, expected error code). The expected codes
were derived from the documented option table by hand, one mutation class at
a time, before the validator existed.
"""

HEAD = "python -m Infinigen.datagen.manage_jobs"
BASE = (
    f"{HEAD} --output_folder outputs/stereo_data --num_scenes 10000"
    " --pipeline_configs slurm.gin stereo.gin cuda_terrain.gin"
    " --cleanup big_files --warmup_sec 60000 --configs high_quality_terrain"
)

MUTATION_CASES = [
    # --- BadPrefix: broken invocation head (8) ---
    ("empty line", "", False, "BadPrefix"),
    ("truncated module path", "python -m Infinigen.datagen.manage --num_scenes 1", False, "BadPrefix"),
    ("missing -m", "python Infinigen.datagen.manage_jobs --num_scenes 1", False, "BadPrefix"),
    ("misspelled interpreter", "pyhton -m Infinigen.datagen.manage_jobs --num_scenes 1", False, "BadPrefix"),
    ("no interpreter", "-m Infinigen.datagen.manage_jobs --num_scenes 1", False, "BadPrefix"),
    ("lowercased module", "python -m infinigen.datagen.manage_jobs --num_scenes 1", False, "BadPrefix"),
    ("refusal text", "I don't know how to do that", False, "BadPrefix"),
    ("wrong program", "blender --background --python scene.py", False, "BadPrefix"),
    # --- NotSingleLine: embedded line breaks (4) ---
    ("trailing extra line", BASE + "\n--overwrite", False, "NotSingleLine"),
    ("break mid-command", BASE.replace(" --cleanup", "\n--cleanup", 1), False, "NotSingleLine"),
    ("two commands", BASE + "\n" + BASE, False, "NotSingleLine"),
    ("prose then command", "first do this:\n" + BASE, False, "NotSingleLine"),
    # --- UnknownOption: tokens outside the documented table (8) ---
    ("invented option", f"{HEAD} --frames 10", False, "UnknownOption"),
    ("invented short option", f"{HEAD} -z", False, "UnknownOption"),
    ("bare positional", f"{HEAD} output_folder outputs/hello_world", False, "UnknownOption"),
    ("hyphen for underscore", f"{HEAD} --output-folder outputs/x", False, "UnknownOption"),
    ("misspelled configs", f"{HEAD} --configz dev.gin", False, "UnknownOption"),
    ("squashed name", f"{HEAD} --numscenes 5", False, "UnknownOption"),
    ("stray trailing token", BASE + " --overwrite bonus_token", False, "UnknownOption"),
    ("unknown short q", f"{HEAD} -q", False, "UnknownOption"),
    # --- AmbiguousPrefix: prefix matching several options (6) ---
    ("prefix --o", f"{HEAD} --o outputs/x", False, "AmbiguousPrefix"),
    ("prefix --over", f"{HEAD} --over a.b=1", False, "AmbiguousPrefix"),
    ("prefix --pipeline", f"{HEAD} --pipeline slurm.gin", False, "AmbiguousPrefix"),
    ("prefix --w", f"{HEAD} --w 60", False, "AmbiguousPrefix"),
    ("prefix --c", f"{HEAD} --c all", False, "AmbiguousPrefix"),
    ("bare double dash", f"{HEAD} --", False, "AmbiguousPrefix"),
    # --- MissingValue: valued option with no value (8) ---
    ("output_folder at end", f"{HEAD} --output_folder", False, "MissingValue"),
    ("num_scenes before flag", f"{HEAD} --num_scenes --overwrite", False, "MissingValue"),
    ("cleanup at end", f"{HEAD} --cleanup", False, "MissingValue"),
    ("configs before flag", f"{HEAD} --configs --overwrite", False, "MissingValue"),
    ("overrides at end", f"{HEAD} --overrides", False, "MissingValue"),
    ("pipeline_configs before flag", f"{HEAD} --pipeline_configs --debug", False, "MissingValue"),
    ("warmup_sec at end", f"{HEAD} --warmup_sec", False, "MissingValue"),
    ("wandb_mode before flag", f"{HEAD} --wandb_mode --verbose", False, "MissingValue"),
    # --- BadEnumValue: outside the documented enum sets (6) ---
    ("cleanup sometimes", f"{HEAD} --cleanup sometimes", False, "BadEnumValue"),
    ("cleanup wrong case", f"{HEAD} --cleanup BIG_FILES", False, "BadEnumValue"),
    ("cleanup squashed", f"{HEAD} --cleanup bigfiles", False, "BadEnumValue"),
    ("wandb on", f"{HEAD} --wandb_mode on", False, "BadEnumValue"),
    ("wandb wrong case", f"{HEAD} --wandb_mode Offline", False, "BadEnumValue"),
    ("wandb enabled", f"{HEAD} --wandb_mode enabled", False, "BadEnumValue"),
    # --- NotAnInteger: integer-typed options (6) ---
    ("num_scenes word", f"{HEAD} --num_scenes ten", False, "NotAnInteger"),
    ("num_scenes float", f"{HEAD} --num_scenes 10.5", False, "NotAnInteger"),
    ("meta_seed word", f"{HEAD} --meta_seed abc", False, "NotAnInteger"),
    ("warmup scientific", f"{HEAD} --warmup_sec 1e3", False, "NotAnInteger"),
    ("num_scenes suffixed", f"{HEAD} --num_scenes 10x", False, "NotAnInteger"),
    ("meta_seed hex", f"{HEAD} --meta_seed 0x1f", False, "NotAnInteger"),
    # --- UnknownGinFile: whitelist misses, strict mode (8) ---
    ("scene gin invented", f"{HEAD} --configs nonexistent.gin", True, "UnknownGinFile"),
    ("scene gin mixed", f"{HEAD} --configs desert.gin fake_one.gin", True, "UnknownGinFile"),
    ("pipeline gin invented", f"{HEAD} --pipeline_configs bogus.gin", True, "UnknownGinFile"),
    ("pipeline gin mixed", f"{HEAD} --pipeline_configs slurm.gin wrong.gin", True, "UnknownGinFile"),
    ("trailer_video not listed", f"{HEAD} --configs trailer_video", True, "UnknownGinFile"),
    ("scene gin typo", f"{HEAD} --configs dessert.gin", True, "UnknownGinFile"),
    ("pipeline wrong size", f"{HEAD} --pipeline_configs local_32GB.gin", True, "UnknownGinFile"),
    ("pipeline bare unknown", f"{HEAD} --pipeline_configs monocular.gin highquality", True, "UnknownGinFile"),
    # --- MalformedOverride: gin override syntax (6) ---
    ("override split by space", f"{HEAD} --overrides compose_nature.rain particles=1", False, "MalformedOverride"),
    ("override empty name", f"{HEAD} --overrides =1.0", False, "MalformedOverride"),
    ("override trailing dot", f"{HEAD} --overrides foo.=1", False, "MalformedOverride"),
    ("override no assignment", f"{HEAD} --overrides foo.bar", False, "MalformedOverride"),
    ("override digit head", f"{HEAD} --overrides 1foo=2", False, "MalformedOverride"),
    ("override double dot", f"{HEAD} --pipeline_overrides a..b=1", False, "MalformedOverride"),
]
