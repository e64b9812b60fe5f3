from pynilmet.cli import cli

cli(prog_name="pynilmet")
