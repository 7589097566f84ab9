"""lozenge-lefschetz command-line interface."""
