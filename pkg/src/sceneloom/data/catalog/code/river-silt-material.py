"""River Silt Material generator (Materials)."""

PARAMS = {
    "size": 3.777,
    "detail": 5,
    "roughness": 0.233,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt Material"
    for key, value in params.items():
        node[key] = value
    return node
