from hopfflow.cli.app import main

main()
