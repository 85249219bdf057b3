"""Pine Bark 07 Material generator (Materials)."""

PARAMS = {
    "size": 3.327,
    "detail": 2,
    "roughness": 0.971,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
