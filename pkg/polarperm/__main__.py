import sys

from .cli import main
sys.path.append('.')

if __name__ == "__main__":
    main.main(prog_name='polarperm')
