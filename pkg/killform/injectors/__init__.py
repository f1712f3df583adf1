from .groups import GroupRegistryInj
