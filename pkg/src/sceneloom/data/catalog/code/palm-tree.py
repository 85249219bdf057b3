"""Palm Tree generator (Trees)."""

PARAMS = {
    "size": 3.906,
    "detail": 4,
    "roughness": 0.481,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Palm Tree"
    for key, value in params.items():
        node[key] = value
    return node
