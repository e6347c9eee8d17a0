from atiyah.cli import main

main()
