"""
settings.py - Run settings management

This file handles the numerical settings of a run: the sampling plan used
by the certifier and the limits of the series builder. Settings live in a
JSON file; the environment variable EXPDISK_ANGLES and the command-line
flags override what the file says.
"""

import json
import os
import logging

from geometry.certifier import DEFAULT_ANGLES, DEFAULT_RADII, DEFAULT_REFINE, SamplingPlan
from numerics.series import MAX_TERMS, MIN_DEGREE

logger = logging.getLogger(__name__)

# where to look for the settings
SETTINGS_FILE = "settings.json"

# environment variable that overrides the angle count
ANGLES_ENV = "EXPDISK_ANGLES"

# series are built on |z| <= r_ref
DEFAULT_R_REF = 1.0


class SettingsManager:
    """
    manages run settings (loading, overriding and saving)

    defaults are merged with whatever the JSON file holds, then the
    environment override is applied on top
    """

    def __init__(self, settings_file=SETTINGS_FILE, environ=None):
        """create the settings manager and load saved settings if they exist"""
        self.settings_file = settings_file
        self.environ = os.environ if environ is None else environ

        # default settings (used if no settings file exists)
        self.settings = {
            'radii': list(DEFAULT_RADII),
            'angles': DEFAULT_ANGLES,
            'refine_factor': DEFAULT_REFINE,
            'r_ref': DEFAULT_R_REF,
            'min_degree': MIN_DEGREE,
            'max_terms': MAX_TERMS
        }

        self.load_settings()
        self.apply_environment()

    def load_settings(self):
        """
        load settings from the JSON file
        a missing or unreadable file leaves the defaults in place
        """
        if os.path.exists(self.settings_file):
            try:
                with open(self.settings_file, 'r') as f:
                    loaded = json.load(f)
                    self.settings.update(loaded)  # merge loaded settings with defaults
                logger.info(f"Loaded settings from {self.settings_file}")
            except Exception as e:
                logger.error(f"Error loading settings: {e}")
        else:
            logger.debug(f"No settings file at {self.settings_file}, using defaults")

    def apply_environment(self):
        """EXPDISK_ANGLES replaces the angle count; bad values are logged and ignored"""
        raw = self.environ.get(ANGLES_ENV)
        if raw is None:
            return
        try:
            angles = int(raw)
        except ValueError:
            logger.warning(f"Ignoring {ANGLES_ENV}={raw!r}: not an integer")
            return
        if angles <= 0:
            logger.warning(f"Ignoring {ANGLES_ENV}={raw!r}: must be positive")
            return
        self.settings['angles'] = angles
        logger.info(f"{ANGLES_ENV} sets angles to {angles}")

    def save_settings(self):
        """save current settings to the JSON file (indent=2 keeps it readable)"""
        try:
            with open(self.settings_file, 'w') as f:
                json.dump(self.settings, f, indent=2)
            logger.info(f"Saved settings to {self.settings_file}")
        except Exception as e:
            logger.error(f"Error saving settings: {e}")

    def get(self, key, default=None):
        """get a setting value by name (returns default if not found)"""
        return self.settings.get(key, default)

    def set(self, key, value):
        """set a setting value for this run (save_settings persists it)"""
        self.settings[key] = value

    def get_plan(self):
        """the sampling plan these settings describe"""
        return SamplingPlan(
            tuple(self.settings.get('radii', DEFAULT_RADII)),
            int(self.settings.get('angles', DEFAULT_ANGLES)),
            int(self.settings.get('refine_factor', DEFAULT_REFINE))
        )

    def get_r_ref(self):
        """radius the series tail bounds are computed for"""
        return float(self.settings.get('r_ref', DEFAULT_R_REF))

    def get_series_options(self):
        """keyword arguments for the series builders"""
        return {
            'min_degree': int(self.settings.get('min_degree', MIN_DEGREE)),
            'max_terms': int(self.settings.get('max_terms', MAX_TERMS))
        }
